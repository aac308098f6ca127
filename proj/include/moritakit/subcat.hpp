#pragma once

// Subcategory machinery for zero-map Morita rings: the six classes cut out
// by epi/mono conditions on the structure maps, the TTF decompositions,
// bireflective approximations, and the pushout construction of left
// approximations for add-presented corner subcategories.

#include "moritakit/duality.hpp"

namespace moritakit {

template <typename K>
void require_zero_maps(const RingPtr<K>& ring, const char* where) {
  if (!ring->ctx.zero_maps())
    throw MoritaError(std::string(where) + " requires phi = psi = 0");
}

/// ρ(g): Y -> Hom_A(N, X) as vectorized rows (one per basis vector of Y).
template <typename K>
Mat<K> rho_matrix(const TupleModule<K>& t) {
  const auto& c = t.ring->ctx;
  const Index dn = c.N.dim(), dX = t.X.dim(), dY = t.Y.dim();
  Mat<K> rows(dY, dn * dX);
  for (Index k = 0; k < dY; ++k)
    for (Index i = 0; i < dn; ++i)
      rows.row(k).segment(i * dX, dX) = t.NY.sp.proj.row(i * dY + k) * t.g;
  return rows;
}

/// π(f): X -> Hom_B(M, Y) as vectorized rows.
template <typename K>
Mat<K> pi_matrix(const TupleModule<K>& t) {
  const auto& c = t.ring->ctx;
  const Index dm = c.M.dim(), dX = t.X.dim(), dY = t.Y.dim();
  Mat<K> rows(dX, dm * dY);
  for (Index k = 0; k < dX; ++k)
    for (Index j = 0; j < dm; ++j)
      rows.row(k).segment(j * dY, dY) = t.MX.sp.proj.row(j * dX + k) * t.f;
  return rows;
}

struct ClassFlags {
  bool in_X = false, in_Y = false, in_Z = false;
  bool in_Xp = false, in_Yp = false, in_Zp = false;
};

template <typename K>
ClassFlags class_flags(const TupleModule<K>& t) {
  require_zero_maps(t.ring, "class flags");
  ClassFlags flags;
  const bool f_epi = rank(t.f) == t.Y.dim();
  const bool g_epi = rank(t.g) == t.X.dim();
  const bool f_zero = all_zero(t.f);
  const bool g_zero = all_zero(t.g);
  const bool rho_mono = rank(rho_matrix(t)) == t.Y.dim();
  const bool pi_mono = rank(pi_matrix(t)) == t.X.dim();
  flags.in_X = f_epi && g_zero;
  flags.in_Y = t.X.dim() == 0;
  flags.in_Z = f_zero && rho_mono;
  flags.in_Xp = g_epi && f_zero;
  flags.in_Yp = t.Y.dim() == 0;
  flags.in_Zp = g_zero && pi_mono;
  // For validated tuples over a zero-map ring an epi structure map forces
  // the other one to vanish.
  if (f_epi && !g_zero) throw MoritaError("epi f with nonzero g on a validated tuple");
  if (g_epi && !f_zero) throw MoritaError("epi g with nonzero f on a validated tuple");
  return flags;
}

// --- torsion decompositions -----------------------------------------------------

enum class TorsionPair { XY, YZ, XpYp, YpZp };

inline const char* to_string(TorsionPair p) {
  switch (p) {
    case TorsionPair::XY: return "XY";
    case TorsionPair::YZ: return "YZ";
    case TorsionPair::XpYp: return "XpYp";
    case TorsionPair::YpZp: return "YpZp";
  }
  return "?";
}

template <typename K>
struct TorsionDecomposition {
  TorsionPair pair;
  TupleModule<K> sub, quot;
  TupleMap<K> inclusion, projection;
};

namespace subcatdetail {

template <typename K>
TupleModule<K> zero_x_tuple(const RingPtr<K>& ring, const Module<K>& y, std::string name) {
  const auto& c = ring->ctx;
  Module<K> zero = Module<K>::zero(c.A);
  TensorModule<K> mx = tensor(c.M, zero);
  TensorModule<K> ny = tensor(c.N, y);
  TupleModule<K> t;
  t.ring = ring;
  t.X = std::move(zero);
  t.Y = y;
  t.f = Mat<K>::Zero(mx.module.dim(), y.dim());
  t.g = Mat<K>::Zero(ny.module.dim(), 0);
  t.MX = std::move(mx);
  t.NY = std::move(ny);
  t.name = std::move(name);
  t.validate();
  return t;
}

template <typename K>
TupleModule<K> zero_y_tuple(const RingPtr<K>& ring, const Module<K>& x, std::string name) {
  const auto& c = ring->ctx;
  Module<K> zero = Module<K>::zero(c.B);
  TensorModule<K> mx = tensor(c.M, x);
  TensorModule<K> ny = tensor(c.N, zero);
  TupleModule<K> t;
  t.ring = ring;
  t.X = x;
  t.Y = std::move(zero);
  t.f = Mat<K>::Zero(mx.module.dim(), 0);
  t.g = Mat<K>::Zero(ny.module.dim(), x.dim());
  t.MX = std::move(mx);
  t.NY = std::move(ny);
  t.name = std::move(name);
  t.validate();
  return t;
}

/// Tuple with prescribed parts where one structure map is zero; f and g are
/// given on the materialized tensor spaces (non-deduced so call sites may
/// pass Eigen expressions).
template <typename K>
TupleModule<K> assemble(const RingPtr<K>& ring, const Module<K>& x, const Module<K>& y,
                        const Mat<K>& f, const Mat<K>& g, std::string name) {
  return TupleModule<K>::make(ring, x, y, f, g, std::move(name));
}

}  // namespace subcatdetail

template <typename K>
TorsionDecomposition<K> torsion_decompose(const TupleModule<K>& t, TorsionPair pair) {
  require_zero_maps(t.ring, "torsion decomposition");
  const auto& c = t.ring->ctx;
  switch (pair) {
    case TorsionPair::XY: {
      // 0 -> (X, Im f, f|, 0) -> t -> (0, Coker f, 0, 0) -> 0
      Subspace<K> im = image(t.f);
      auto sub_y = submodule(t.Y, im);
      Mat<K> kappa(t.f.rows(), im.dim());
      for (Index r = 0; r < t.f.rows(); ++r) kappa.row(r) = im.coords_of(t.f.row(r));
      auto sub = subcatdetail::assemble<K>(
          t.ring, t.X, sub_y.module, kappa,
          Mat<K>::Zero(tensor(c.N, sub_y.module).module.dim(), t.X.dim()),
          t.name + ".tors");
      auto quot_y = quotient_module(t.Y, im);
      auto quot = subcatdetail::zero_x_tuple(t.ring, quot_y.module, t.name + ".torsfree");
      TupleMap<K> incl(sub, t, Mat<K>(Mat<K>::Identity(t.X.dim(), t.X.dim())),
                       sub_y.inclusion.matrix);
      TupleMap<K> proj(t, quot, Mat<K>(t.X.dim(), 0), quot_y.projection.matrix);
      return {pair, sub, quot, incl, proj};
    }
    case TorsionPair::YZ: {
      // 0 -> (0, Ker ρ(g), 0, 0) -> t -> (X, Im ρ(g), 0, ev) -> 0
      Mat<K> rho = rho_matrix(t);
      Subspace<K> ker = kernel(rho);
      auto sub_y = submodule(t.Y, ker);
      auto sub = subcatdetail::zero_x_tuple(t.ring, sub_y.module, t.name + ".tors");

      HomModule<K> h = hom_module(c.N, t.X);
      Mat<K> rho_coords(t.Y.dim(), h.module.dim());
      for (Index k = 0; k < t.Y.dim(); ++k)
        rho_coords.row(k) = h.space.coords_of(rho.row(k));
      Subspace<K> im = image(rho_coords);
      auto quot_y = submodule(h.module, im);
      // Evaluation of the image inside Hom_A(N, X) back on N.
      TensorModule<K> ny_q = tensor(c.N, quot_y.module);
      Mat<K> plain_g(c.N.dim() * im.dim(), t.X.dim());
      for (Index u = 0; u < im.dim(); ++u) {
        RowVec<K> lifted = im.basis().row(u) * h.space.basis();  // vectorized map
        Mat<K> w = unvec<K>(lifted, c.N.dim(), t.X.dim());
        for (Index i = 0; i < c.N.dim(); ++i) plain_g.row(i * im.dim() + u) = w.row(i);
      }
      Mat<K> gq = ny_q.sp.section * plain_g;
      if (ny_q.sp.proj * gq != plain_g)
        throw MoritaError("torsion YZ: evaluation map not well-defined");
      TensorModule<K> mx_q = tensor(c.M, t.X);
      auto quot = subcatdetail::assemble<K>(t.ring, t.X, quot_y.module,
                                           Mat<K>::Zero(mx_q.module.dim(), im.dim()), gq,
                                           t.name + ".torsfree");
      Mat<K> corestrict(t.Y.dim(), im.dim());
      for (Index k = 0; k < t.Y.dim(); ++k)
        corestrict.row(k) = im.coords_of(rho_coords.row(k));
      TupleMap<K> incl(sub, t, Mat<K>(0, t.X.dim()), sub_y.inclusion.matrix);
      TupleMap<K> proj(t, quot, Mat<K>(Mat<K>::Identity(t.X.dim(), t.X.dim())), corestrict);
      return {pair, sub, quot, incl, proj};
    }
    case TorsionPair::XpYp: {
      // 0 -> (Im g, Y, 0, g|) -> t -> (Coker g, 0, 0, 0) -> 0
      Subspace<K> im = image(t.g);
      auto sub_x = submodule(t.X, im);
      Mat<K> gco(t.g.rows(), im.dim());
      for (Index r = 0; r < t.g.rows(); ++r) gco.row(r) = im.coords_of(t.g.row(r));
      auto sub = subcatdetail::assemble<K>(
          t.ring, sub_x.module, t.Y,
          Mat<K>::Zero(tensor(c.M, sub_x.module).module.dim(), t.Y.dim()), gco,
          t.name + ".tors");
      auto quot_x = quotient_module(t.X, im);
      auto quot = subcatdetail::zero_y_tuple(t.ring, quot_x.module, t.name + ".torsfree");
      TupleMap<K> incl(sub, t, sub_x.inclusion.matrix,
                       Mat<K>(Mat<K>::Identity(t.Y.dim(), t.Y.dim())));
      TupleMap<K> proj(t, quot, quot_x.projection.matrix, Mat<K>(t.Y.dim(), 0));
      return {pair, sub, quot, incl, proj};
    }
    case TorsionPair::YpZp: {
      // 0 -> (Ker π(f), 0, 0, 0) -> t -> (Im π(f), Y, ev, 0) -> 0
      Mat<K> pi = pi_matrix(t);
      Subspace<K> ker = kernel(pi);
      auto sub_x = submodule(t.X, ker);
      auto sub = subcatdetail::zero_y_tuple(t.ring, sub_x.module, t.name + ".tors");

      HomModule<K> h = hom_module(c.M, t.Y);
      Mat<K> pi_coords(t.X.dim(), h.module.dim());
      for (Index k = 0; k < t.X.dim(); ++k)
        pi_coords.row(k) = h.space.coords_of(pi.row(k));
      Subspace<K> im = image(pi_coords);
      auto quot_x = submodule(h.module, im);
      TensorModule<K> mx_q = tensor(c.M, quot_x.module);
      Mat<K> plain_f(c.M.dim() * im.dim(), t.Y.dim());
      for (Index u = 0; u < im.dim(); ++u) {
        RowVec<K> lifted = im.basis().row(u) * h.space.basis();
        Mat<K> w = unvec<K>(lifted, c.M.dim(), t.Y.dim());
        for (Index j = 0; j < c.M.dim(); ++j) plain_f.row(j * im.dim() + u) = w.row(j);
      }
      Mat<K> fq = mx_q.sp.section * plain_f;
      if (mx_q.sp.proj * fq != plain_f)
        throw MoritaError("torsion YpZp: evaluation map not well-defined");
      TensorModule<K> ny_q = tensor(c.N, t.Y);
      auto quot = subcatdetail::assemble<K>(t.ring, quot_x.module, t.Y, fq,
                                           Mat<K>::Zero(ny_q.module.dim(), im.dim()),
                                           t.name + ".torsfree");
      Mat<K> corestrict(t.X.dim(), im.dim());
      for (Index k = 0; k < t.X.dim(); ++k)
        corestrict.row(k) = im.coords_of(pi_coords.row(k));
      TupleMap<K> incl(sub, t, sub_x.inclusion.matrix, Mat<K>(0, t.Y.dim()));
      TupleMap<K> proj(t, quot, corestrict, Mat<K>(Mat<K>::Identity(t.Y.dim(), t.Y.dim())));
      return {pair, sub, quot, incl, proj};
    }
  }
  throw MoritaError("unknown torsion pair");
}

/// Membership of sub/quot in the tagged torsion/torsion-free classes.
template <typename K>
bool decomposition_members_match(const TorsionDecomposition<K>& d) {
  ClassFlags sub = class_flags(d.sub);
  ClassFlags quot = class_flags(d.quot);
  switch (d.pair) {
    case TorsionPair::XY: return sub.in_X && quot.in_Y;
    case TorsionPair::YZ: return sub.in_Y && quot.in_Z;
    case TorsionPair::XpYp: return sub.in_Xp && quot.in_Yp;
    case TorsionPair::YpZp: return sub.in_Yp && quot.in_Zp;
  }
  return false;
}

/// Exactness of the decomposition by rank accounting on the flat modules.
template <typename K>
bool decomposition_exact(const TorsionDecomposition<K>& d, const TupleModule<K>& t) {
  Module<K> ft = tuple_to_flat(t);
  Mat<K> incl = Mat<K>::Zero(tuple_to_flat(d.sub).dim(), ft.dim());
  incl.topLeftCorner(d.inclusion.a.rows(), d.inclusion.a.cols()) = d.inclusion.a;
  incl.bottomRightCorner(d.inclusion.b.rows(), d.inclusion.b.cols()) = d.inclusion.b;
  Mat<K> proj = Mat<K>::Zero(ft.dim(), tuple_to_flat(d.quot).dim());
  proj.topLeftCorner(d.projection.a.rows(), d.projection.a.cols()) = d.projection.a;
  proj.bottomRightCorner(d.projection.b.rows(), d.projection.b.cols()) = d.projection.b;
  return rank(incl) == incl.rows() && rank(proj) == proj.cols() &&
         image(incl) == kernel(proj);
}

template <typename K>
struct HomVanishingReport {
  bool all_zero = true;
  std::vector<std::pair<std::string, Index>> counterexamples;  // names, hom dim
};

/// Hom from sampled torsion members to sampled torsion-free members must
/// vanish; every decomposition of the samples feeds both lists.
template <typename K>
HomVanishingReport<K> hom_vanishing_check(const std::vector<TupleModule<K>>& samples,
                                          TorsionPair pair) {
  HomVanishingReport<K> rep;
  std::vector<TupleModule<K>> torsion, torsfree;
  for (const auto& t : samples) {
    auto d = torsion_decompose(t, pair);
    torsion.push_back(d.sub);
    torsfree.push_back(d.quot);
  }
  for (const auto& u : torsion)
    for (const auto& v : torsfree) {
      Index h = hom_dim(tuple_to_flat(u), tuple_to_flat(v));
      if (h != 0) {
        rep.all_zero = false;
        rep.counterexamples.push_back({u.name + " -> " + v.name, h});
      }
    }
  return rep;
}

// --- bireflective approximations ---------------------------------------------

enum class BireflectiveTarget { modA, modB, lowerTri, upperTri };

inline const char* to_string(BireflectiveTarget t) {
  switch (t) {
    case BireflectiveTarget::modA: return "modA";
    case BireflectiveTarget::modB: return "modB";
    case BireflectiveTarget::lowerTri: return "lowerTri";
    case BireflectiveTarget::upperTri: return "upperTri";
  }
  return "?";
}

/// Left approximation: t -> r with r in the target subcategory; right
/// approximation: r -> t. Formulas follow the bireflective description
/// (cokernels of the structure maps on the left, kernels of their adjoint
/// transposes on the right).
template <typename K>
TupleMap<K> bireflective_approx(const TupleModule<K>& t, BireflectiveTarget target,
                                ApproxSide side) {
  require_zero_maps(t.ring, "bireflective approximation");
  const auto& c = t.ring->ctx;
  if (side == ApproxSide::left) {
    switch (target) {
      case BireflectiveTarget::modA: {
        auto coker = quotient_module(t.X, image(t.g));
        auto r = subcatdetail::zero_y_tuple(t.ring, coker.module, t.name + "->modA");
        return TupleMap<K>(t, r, coker.projection.matrix, Mat<K>(t.Y.dim(), 0));
      }
      case BireflectiveTarget::modB: {
        auto coker = quotient_module(t.Y, image(t.f));
        auto r = subcatdetail::zero_x_tuple(t.ring, coker.module, t.name + "->modB");
        return TupleMap<K>(t, r, Mat<K>(t.X.dim(), 0), coker.projection.matrix);
      }
      case BireflectiveTarget::lowerTri: {
        // t -> (Coker g, Y, h, 0) with h induced by f through M x pi.
        auto coker = quotient_module(t.X, image(t.g));
        TensorModule<K> mxq = tensor(c.M, coker.module);
        Mat<K> m_pi = t.MX.sp.induce(
            kron(Mat<K>(Mat<K>::Identity(c.M.dim(), c.M.dim())), coker.projection.matrix),
            mxq.sp);
        auto h = solve(Mat<K>(m_pi.transpose()), Mat<K>(t.f.transpose()));
        if (!h) throw MoritaError("lowerTri approximation: h does not descend");
        TensorModule<K> nyq = tensor(c.N, t.Y);
        auto r = subcatdetail::assemble<K>(t.ring, coker.module, t.Y, Mat<K>(h->transpose()),
                                          Mat<K>::Zero(nyq.module.dim(), coker.module.dim()),
                                          t.name + "->lowerTri");
        return TupleMap<K>(t, r, coker.projection.matrix,
                           Mat<K>(Mat<K>::Identity(t.Y.dim(), t.Y.dim())));
      }
      case BireflectiveTarget::upperTri: {
        auto coker = quotient_module(t.Y, image(t.f));
        TensorModule<K> nyq = tensor(c.N, coker.module);
        Mat<K> n_pi = t.NY.sp.induce(
            kron(Mat<K>(Mat<K>::Identity(c.N.dim(), c.N.dim())), coker.projection.matrix),
            nyq.sp);
        auto h = solve(Mat<K>(n_pi.transpose()), Mat<K>(t.g.transpose()));
        if (!h) throw MoritaError("upperTri approximation: g does not descend");
        TensorModule<K> mxq = tensor(c.M, t.X);
        auto r = subcatdetail::assemble<K>(t.ring, t.X, coker.module,
                                          Mat<K>::Zero(mxq.module.dim(), coker.module.dim()),
                                          Mat<K>(h->transpose()), t.name + "->upperTri");
        return TupleMap<K>(t, r, Mat<K>(Mat<K>::Identity(t.X.dim(), t.X.dim())),
                           coker.projection.matrix);
      }
    }
  }
  switch (target) {
    case BireflectiveTarget::modA: {
      auto ker = submodule(t.X, kernel(pi_matrix(t)));
      auto r = subcatdetail::zero_y_tuple(t.ring, ker.module, "modA->" + t.name);
      return TupleMap<K>(r, t, ker.inclusion.matrix, Mat<K>(0, t.Y.dim()));
    }
    case BireflectiveTarget::modB: {
      auto ker = submodule(t.Y, kernel(rho_matrix(t)));
      auto r = subcatdetail::zero_x_tuple(t.ring, ker.module, "modB->" + t.name);
      return TupleMap<K>(r, t, Mat<K>(0, t.X.dim()), ker.inclusion.matrix);
    }
    case BireflectiveTarget::lowerTri: {
      // (X, Ker ρ(g), f|, 0) -> t; f corestricts because ρ(g)∘f = 0.
      auto ker = submodule(t.Y, kernel(rho_matrix(t)));
      Mat<K> fco(t.f.rows(), ker.module.dim());
      Subspace<K> ks = kernel(rho_matrix(t));
      for (Index r = 0; r < t.f.rows(); ++r) fco.row(r) = ks.coords_of(t.f.row(r));
      TensorModule<K> nyk = tensor(c.N, ker.module);
      auto r = subcatdetail::assemble<K>(t.ring, t.X, ker.module, fco,
                                        Mat<K>::Zero(nyk.module.dim(), t.X.dim()),
                                        "lowerTri->" + t.name);
      return TupleMap<K>(r, t, Mat<K>(Mat<K>::Identity(t.X.dim(), t.X.dim())),
                         ker.inclusion.matrix);
    }
    case BireflectiveTarget::upperTri: {
      auto ker = submodule(t.X, kernel(pi_matrix(t)));
      Mat<K> gco(t.g.rows(), ker.module.dim());
      Subspace<K> ks = kernel(pi_matrix(t));
      for (Index r = 0; r < t.g.rows(); ++r) gco.row(r) = ks.coords_of(t.g.row(r));
      TensorModule<K> mxk = tensor(c.M, ker.module);
      auto r = subcatdetail::assemble<K>(t.ring, ker.module, t.Y,
                                        Mat<K>::Zero(mxk.module.dim(), t.Y.dim()), gco,
                                        "upperTri->" + t.name);
      return TupleMap<K>(r, t, ker.inclusion.matrix,
                         Mat<K>(Mat<K>::Identity(t.Y.dim(), t.Y.dim())));
    }
  }
  throw MoritaError("unknown bireflective target");
}

/// Factoring check at the flat level: every map t -> w (left) or w -> t
/// (right) with w a member of the target class factors through the
/// approximation by a module map.
template <typename K>
bool bireflective_factors(const TupleMap<K>& approx, const TupleModule<K>& probe,
                          ApproxSide side) {
  Module<K> flat_src = tuple_to_flat(approx.source);
  Module<K> flat_tgt = tuple_to_flat(approx.target);
  Mat<K> am = Mat<K>::Zero(flat_src.dim(), flat_tgt.dim());
  am.topLeftCorner(approx.a.rows(), approx.a.cols()) = approx.a;
  am.bottomRightCorner(approx.b.rows(), approx.b.cols()) = approx.b;
  Module<K> flat_probe = tuple_to_flat(probe);
  if (side == ApproxSide::left) {
    auto gammas = hom_basis(flat_tgt, flat_probe);
    Mat<K> span(static_cast<Index>(gammas.size()), flat_src.dim() * flat_probe.dim());
    for (std::size_t u = 0; u < gammas.size(); ++u)
      span.row(static_cast<Index>(u)) = vec<K>(Mat<K>(am * gammas[u]));
    auto reach = image(span);
    for (const auto& f : hom_basis(flat_src, flat_probe))
      if (!reach.contains(vec<K>(f))) return false;
    return true;
  }
  auto gammas = hom_basis(flat_probe, flat_src);
  Mat<K> span(static_cast<Index>(gammas.size()), flat_probe.dim() * flat_tgt.dim());
  for (std::size_t u = 0; u < gammas.size(); ++u)
    span.row(static_cast<Index>(u)) = vec<K>(Mat<K>(gammas[u] * am));
  auto reach = image(span);
  for (const auto& f : hom_basis(flat_probe, flat_tgt))
    if (!reach.contains(vec<K>(f))) return false;
  return true;
}

// --- Theorem 4.8 style left approximations --------------------------------------

template <typename K>
struct WApproximation {
  TupleMap<K> map;  // t -> (X1, Y1, rho. n, 0)
};

/// Left approximation of t into the class of tuples with X in add(u_gens)
/// and Y in add(v_gens); u_gens must be killed by Hom_A(N, -), v_gens by
/// N (x)_B -.
template <typename K>
TupleMap<K> w_left_approximation(const std::vector<Module<K>>& u_gens,
                                 const std::vector<Module<K>>& v_gens,
                                 const TupleModule<K>& t) {
  require_zero_maps(t.ring, "W approximation");
  const auto& c = t.ring->ctx;
  Module<K> n_left = c.N.as_left_module();
  for (const auto& u : u_gens)
    if (hom_dim(n_left, u) != 0)
      throw MoritaError("precondition fails: Hom_A(N, " + u.name() + ") != 0");
  for (const auto& v : v_gens)
    if (tensor(c.N, v).module.dim() != 0)
      throw MoritaError("precondition fails: N (x) " + v.name() + " != 0");

  // Left U-approximation of the X part and the pushout with f.
  ModuleMap<K> m = add_approximation(u_gens, t.X, ApproxSide::left);
  const Module<K>& x1 = m.target;
  TensorModule<K> mx1 = tensor(c.M, x1);
  Mat<K> m_tensor = t.MX.sp.induce(
      kron(Mat<K>(Mat<K>::Identity(c.M.dim(), c.M.dim())), m.matrix), mx1.sp);

  auto dsum = direct_sum(c.B, {t.Y, mx1.module});
  Mat<K> glue(t.MX.module.dim(), dsum.module.dim());
  glue.leftCols(t.Y.dim()) = t.f;
  glue.rightCols(mx1.module.dim()) = -m_tensor;
  auto push = quotient_module(dsum.module, image(glue));
  Mat<K> theta = dsum.inclusion(0, t.Y.dim()) * push.projection.matrix;
  Mat<K> rho = dsum.inclusion(1, mx1.module.dim()) * push.projection.matrix;

  ModuleMap<K> n = add_approximation(v_gens, push.module, ApproxSide::left);
  const Module<K>& y1 = n.target;

  TensorModule<K> ny1 = tensor(c.N, y1);
  auto w = subcatdetail::assemble<K>(t.ring, x1, y1, Mat<K>(rho * n.matrix),
                                    Mat<K>::Zero(ny1.module.dim(), x1.dim()),
                                    t.name + "->W");
  return TupleMap<K>(t, w, m.matrix, Mat<K>(theta * n.matrix));
}

}  // namespace moritakit

#pragma once

// The duality on tuple modules over the opposite context, and the
// selfinjectivity test with its sufficient condition on the corner functors.

#include "moritakit/contexts.hpp"

namespace moritakit {

/// Λ(φ,ψ)^op as the Morita ring of (B^op, A^op) with the same underlying
/// bimodules and the pairings composed with the tensor swap.
template <typename K>
MoritaContext<K> opposite_context(const MoritaContext<K>& c) {
  AlgPtr<K> aop = opposite(c.A);
  AlgPtr<K> bop = opposite(c.B);
  const Index dm = c.M.dim(), dn = c.N.dim();

  std::vector<Mat<K>> m_la(aop->dim()), m_ra(bop->dim());
  for (Index k = 0; k < aop->dim(); ++k) m_la[k] = c.M.right_action_of_basis(k);
  for (Index k = 0; k < bop->dim(); ++k) m_ra[k] = c.M.left_action_of_basis(k);
  Bimodule<K> mop(aop, bop, std::move(m_la), std::move(m_ra), c.M.name() + "^op");

  std::vector<Mat<K>> n_la(bop->dim()), n_ra(aop->dim());
  for (Index k = 0; k < bop->dim(); ++k) n_la[k] = c.N.right_action_of_basis(k);
  for (Index k = 0; k < aop->dim(); ++k) n_ra[k] = c.N.left_action_of_basis(k);
  Bimodule<K> nop(bop, aop, std::move(n_la), std::move(n_ra), c.N.name() + "^op");

  // Slots of the opposite ring: A' = B^op, B' = A^op, M' = M with the
  // actions exchanged, N' = N likewise; the pairings pick up a tensor swap.
  TensorBimodule<K> mn_new = tensor_bimodules(mop, nop);  // M' (x)_{A'} N'
  TensorBimodule<K> nm_new = tensor_bimodules(nop, mop);

  Mat<K> phi_new(mn_new.module.dim(), aop->dim());
  {
    Mat<K> plain(dm * dn, aop->dim());
    for (Index i = 0; i < dm; ++i)
      for (Index j = 0; j < dn; ++j) plain.row(i * dn + j) = c.psi_of(j, i);
    phi_new = mn_new.sp.section * plain;
    if (mn_new.sp.proj * phi_new != plain)
      throw MoritaError("opposite context: phi not balanced");
  }
  Mat<K> psi_new(nm_new.module.dim(), bop->dim());
  {
    Mat<K> plain(dn * dm, bop->dim());
    for (Index j = 0; j < dn; ++j)
      for (Index i = 0; i < dm; ++i) plain.row(j * dm + i) = c.phi_of(i, j);
    psi_new = nm_new.sp.section * plain;
    if (nm_new.sp.proj * psi_new != plain)
      throw MoritaError("opposite context: psi not balanced");
  }

  auto out = MoritaContext<K>::make(bop, aop, std::move(mop), std::move(nop),
                                    std::move(phi_new), std::move(psi_new),
                                    c.name.empty() ? "op" : c.name + "^op");
  auto report = validate_context(out);
  if (!report.valid())
    throw MoritaError("opposite context failed validation: " +
                      report.violations.front().identity);
  return out;
}

template <typename K>
RingPtr<K> opposite_ring(const RingPtr<K>& ring) {
  if (auto back = ring->op_back.lock()) return back;
  std::call_once(ring->op_once, [&] {
    auto r = build_morita_algebra(opposite_context(ring->ctx));
    r->op_back = ring;
    ring->op_fwd = r;
  });
  return ring->op_fwd;
}

/// D(X, Y, f, g) = (DY, DX, f', g') over the opposite context, with
/// f'(m ⊗ ξ) = ξ∘f(m ⊗ -) and g'(n ⊗ η) = η∘g(n ⊗ -).
template <typename K>
TupleModule<K> dual_tuple(const TupleModule<K>& t) {
  RingPtr<K> opring = opposite_ring(t.ring);
  const auto& c = t.ring->ctx;
  Module<K> xs = dual(t.Y);
  Module<K> ys = dual(t.X);
  const Index dm = c.M.dim(), dn = c.N.dim(), dX = t.X.dim(), dY = t.Y.dim();

  Mat<K> fy = t.MX.sp.proj * t.f;  // plain M (x) X -> Y
  Mat<K> plain_f(dm * dY, dX);
  for (Index j = 0; j < dm; ++j)
    for (Index u = 0; u < dY; ++u)
      for (Index k = 0; k < dX; ++k) plain_f(j * dY + u, k) = fy(j * dX + k, u);

  Mat<K> gx = t.NY.sp.proj * t.g;  // plain N (x) Y -> X
  Mat<K> plain_g(dn * dX, dY);
  for (Index i = 0; i < dn; ++i)
    for (Index u = 0; u < dX; ++u)
      for (Index k = 0; k < dY; ++k) plain_g(i * dX + u, k) = gx(i * dY + k, u);

  TensorModule<K> mx = tensor(opring->ctx.M, xs);
  Mat<K> f = mx.sp.section * plain_f;
  if (mx.sp.proj * f != plain_f) throw MoritaError("dual tuple: f not well-defined");
  TensorModule<K> ny = tensor(opring->ctx.N, ys);
  Mat<K> g = ny.sp.section * plain_g;
  if (ny.sp.proj * g != plain_g) throw MoritaError("dual tuple: g not well-defined");

  TupleModule<K> out;
  out.ring = opring;
  out.X = std::move(xs);
  out.Y = std::move(ys);
  out.f = std::move(f);
  out.g = std::move(g);
  out.MX = std::move(mx);
  out.NY = std::move(ny);
  out.name = "D(" + t.name + ")";
  out.validate();
  return out;
}

// --- selfinjectivity ---------------------------------------------------------

struct SelfinjectiveReport {
  bool selfinjective = false;
  std::vector<int> matching;  // injective index per projective, -1 if none
};

template <typename K>
SelfinjectiveReport selfinjective_check(const RingPtr<K>& ring) {
  auto projs = classify_projectives(ring);
  auto injs = classify_injectives(ring);
  std::vector<Module<K>> flat_inj;
  for (const auto& t : injs) flat_inj.push_back(tuple_to_flat(t));
  SelfinjectiveReport report;
  report.selfinjective = true;
  std::vector<bool> used(injs.size(), false);
  for (const auto& p : projs) {
    Module<K> fp = tuple_to_flat(p);
    int found = -1;
    for (std::size_t j = 0; j < flat_inj.size(); ++j) {
      if (used[j]) continue;
      if (iso_check(fp, flat_inj[j]).verdict == IsoVerdict::iso) {
        found = static_cast<int>(j);
        used[j] = true;
        break;
      }
    }
    report.matching.push_back(found);
    if (found < 0) report.selfinjective = false;
  }
  return report;
}

struct PremiseItem {
  std::string what;
  bool holds = false;
};

struct PremiseReport {
  bool holds = true;
  std::vector<PremiseItem> items;

  void add(std::string what, bool ok) {
    holds = holds && ok;
    items.push_back({std::move(what), ok});
  }
};

namespace premisedetail {

/// Checks that tensoring with m sends each projective of a to an injective
/// of b with invertible unit, and Hom(m, -) sends injectives back with
/// invertible counit.
template <typename K>
void check_side(PremiseReport& rep, const std::string& tag, const Bimodule<K>& m,
                const AlgPtr<K>& a, const AlgPtr<K>& b) {
  const std::size_t na = a->prim_idempotents().size();
  const std::size_t nb = b->prim_idempotents().size();
  rep.add(tag + ": corner projective/injective counts match", na == nb);
  for (std::size_t i = 0; i < na; ++i) {
    Module<K> p = projective(a, static_cast<Index>(i)).module;
    TensorModule<K> mp = tensor(m, p);
    bool inj = false;
    for (std::size_t j = 0; j < nb; ++j)
      if (iso_check(mp.module, injective(b, static_cast<Index>(j))).verdict == IsoVerdict::iso)
        inj = true;
    rep.add(tag + ": image of P" + std::to_string(i) + " is injective", inj);

    HomModule<K> back = hom_module(m, mp.module);
    bool unit_iso = false;
    if (back.module.dim() == p.dim()) {
      Mat<K> unit(p.dim(), back.module.dim());
      bool ok = true;
      for (Index k = 0; k < p.dim() && ok; ++k) {
        Mat<K> w(m.dim(), mp.module.dim());
        for (Index j = 0; j < m.dim(); ++j) w.row(j) = mp.sp.proj.row(j * p.dim() + k);
        try {
          unit.row(k) = back.space.coords_of(vec<K>(w));
        } catch (const DimensionError&) {
          ok = false;
        }
      }
      unit_iso = ok && rank(unit) == p.dim();
    }
    rep.add(tag + ": unit on P" + std::to_string(i) + " invertible", unit_iso);
  }
  for (std::size_t j = 0; j < nb; ++j) {
    Module<K> inj = injective(b, static_cast<Index>(j));
    HomModule<K> h = hom_module(m, inj);
    rep.add(tag + ": Hom(M, I" + std::to_string(j) + ") projective",
            is_projective(h.module));
    TensorModule<K> th = tensor(m, h.module);
    Mat<K> plain(m.dim() * h.module.dim(), inj.dim());
    for (Index i = 0; i < m.dim(); ++i)
      for (Index u = 0; u < h.module.dim(); ++u)
        plain.row(i * h.module.dim() + u) = h.basis[u].row(i);
    Mat<K> counit = th.sp.section * plain;
    bool counit_iso = th.sp.proj * counit == plain && th.module.dim() == inj.dim() &&
                      rank(counit) == inj.dim();
    rep.add(tag + ": counit on I" + std::to_string(j) + " invertible", counit_iso);
  }
}

}  // namespace premisedetail

/// Finite sufficient check that (M⊗-, Hom(M,-)) matches proj A with inj B
/// and (N⊗-, Hom(N,-)) matches proj B with inj A.
template <typename K>
PremiseReport prop37_premise(const RingPtr<K>& ring) {
  PremiseReport rep;
  const auto& c = ring->ctx;
  premisedetail::check_side(rep, "M side", c.M, c.A, c.B);
  premisedetail::check_side(rep, "N side", c.N, c.B, c.A);
  return rep;
}

}  // namespace moritakit

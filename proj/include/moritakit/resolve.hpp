#pragma once

// Projective covers, minimal resolutions, homological dimensions with
// certified-infinite detection, and Ext/Tor dimensions.

#include "moritakit/isotest.hpp"
#include "moritakit/module.hpp"

#include <optional>
#include <string>
#include <vector>

namespace moritakit {

template <typename K>
struct Cover {
  Module<K> proj;
  Mat<K> epi;                       // proj -> x, kernel inside rad·proj
  std::vector<Index> idem_indices;  // summand P_{c_j} per selected generator
};

template <typename K>
Cover<K> projective_cover(const Module<K>& x) {
  const auto& alg = x.algebra();
  auto top = quotient_module(x, x.radical_subspace());
  const Mat<K>& to_top = top.projection.matrix;

  // Pick generators idempotent by idempotent; each new generator must add a
  // fresh simple summand of the top (the submodule it generates there).
  std::vector<Index> idems;
  std::vector<RowVec<K>> gens;
  Subspace<K> covered = Subspace<K>::zero(top.module.dim());
  for (std::size_t i = 0; i < alg->prim_idempotents().size(); ++i) {
    Subspace<K> part = x.idempotent_part(static_cast<Index>(i));
    for (Index r = 0; r < part.dim(); ++r) {
      RowVec<K> w = part.basis().row(r);
      RowVec<K> q = w * to_top;
      if (covered.contains(q)) continue;
      idems.push_back(static_cast<Index>(i));
      gens.push_back(w);
      Mat<K> orbit(alg->dim(), top.module.dim());
      for (Index k = 0; k < alg->dim(); ++k)
        orbit.row(k) = q * top.module.action_of_basis(k);
      covered = covered.sum(image(orbit));
    }
  }

  std::vector<Module<K>> summands;
  std::vector<SubmoduleResult<K>> projs;
  for (Index c : idems) {
    projs.push_back(projective(alg, c));
    summands.push_back(projs.back().module);
  }
  auto sum = direct_sum(alg, summands);

  Mat<K> epi(sum.module.dim(), x.dim());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const Mat<K>& basis_in_alg = projs[j].inclusion.matrix;  // rows: elements of A·e_c
    for (Index r = 0; r < basis_in_alg.rows(); ++r)
      epi.row(sum.offsets[j] + r) = gens[j] * x.action_of(basis_in_alg.row(r));
  }
  Cover<K> cover{std::move(sum.module), std::move(epi), std::move(idems)};
  if (rank(cover.epi) != x.dim()) throw ModuleError("projective cover is not surjective");
  if (!cover.proj.radical_subspace().contains(kernel(cover.epi)))
    throw ModuleError("projective cover is not minimal");
  return cover;
}

template <typename K>
bool is_projective(const Module<K>& x) {
  return kernel(projective_cover(x).epi).dim() == 0;
}

enum class ResolutionStatus { terminated, truncated, periodic };

inline const char* to_string(ResolutionStatus s) {
  switch (s) {
    case ResolutionStatus::terminated: return "terminated";
    case ResolutionStatus::truncated: return "truncated";
    case ResolutionStatus::periodic: return "periodic";
  }
  return "?";
}

template <typename K>
struct Resolution {
  Module<K> module;
  std::vector<Module<K>> terms;          // P_0 ... P_L, minimal at every step
  std::vector<Mat<K>> differentials;     // d_0: P_0 -> module, d_i: P_i -> P_{i-1}
  std::vector<Module<K>> syzygies;       // Ω^1, Ω^2, ...
  ResolutionStatus status = ResolutionStatus::truncated;
  Index periodic_start = -1;             // Ω^{start} ≅ Ω^{start+period}, start may be 0 (= module)
  Index period = 0;
  Mat<K> periodic_witness;

  const Module<K>& syzygy(Index k) const {  // Ω^k with Ω^0 = module
    return k == 0 ? module : syzygies[k - 1];
  }

  Index length() const { return static_cast<Index>(terms.size()) - 1; }
};

/// Iterated minimal projective covers up to the requested depth. Detects
/// termination (a zero syzygy) and syzygy periodicity (recorded with an
/// explicit iso witness); periodicity does not stop the iteration, so the
/// terms P_0..P_depth stay available to Ext/Tor.
template <typename K>
Resolution<K> minimal_resolution(const Module<K>& x, Index depth,
                                 Index size_limit = 1 << 14) {
  Resolution<K> res;
  res.module = x;
  Module<K> current = x;
  Mat<K> incl = Mat<K>::Identity(x.dim(), x.dim());  // current ↪ previous term / x
  for (Index k = 0; k <= depth; ++k) {
    auto cover = projective_cover(current);
    res.terms.push_back(cover.proj);
    res.differentials.push_back(cover.epi * incl);
    Subspace<K> ker = kernel(cover.epi);
    if (ker.dim() == 0) {
      res.status = ResolutionStatus::terminated;
      return res;
    }
    auto sub = submodule(cover.proj, ker);
    incl = sub.inclusion.matrix;
    current = sub.module;
    current.set_name("syzygy" + std::to_string(k + 1));
    res.syzygies.push_back(current);
    if (res.periodic_start < 0) {
      for (Index j = 0; j <= k; ++j) {
        auto cmp = iso_check(res.syzygy(j), current);
        if (cmp.verdict == IsoVerdict::iso) {
          res.periodic_start = j;
          res.period = k + 1 - j;
          res.periodic_witness = *cmp.witness;
          break;
        }
      }
    }
    if (current.dim() > size_limit) {
      res.status = ResolutionStatus::truncated;
      return res;
    }
  }
  res.status = res.periodic_start >= 0 ? ResolutionStatus::periodic
                                       : ResolutionStatus::truncated;
  return res;
}

struct DimResult {
  enum class Kind { finite, infinite, at_least };
  Kind kind = Kind::finite;
  long long value = 0;        // finite value or the at_least bound
  long long witness_start = 0, witness_period = 0;

  static DimResult finite(long long v) { return {Kind::finite, v, 0, 0}; }
  static DimResult infinite(long long start, long long period) {
    return {Kind::infinite, 0, start, period};
  }
  static DimResult at_least(long long v) { return {Kind::at_least, v, 0, 0}; }

  bool is_finite() const { return kind == Kind::finite; }
  bool is_infinite() const { return kind == Kind::infinite; }
  bool decided() const { return kind != Kind::at_least; }

  DimResult plus(long long c) const {
    DimResult r = *this;
    r.value += c;
    return r;
  }

  std::string str() const {
    switch (kind) {
      case Kind::finite: return std::to_string(value);
      case Kind::infinite:
        return "infinite (syzygy " + std::to_string(witness_start) + " ~ syzygy " +
               std::to_string(witness_start + witness_period) + ")";
      case Kind::at_least: return ">= " + std::to_string(value);
    }
    return "?";
  }

  /// lhs <= rhs when decidable.
  static std::optional<bool> leq(const DimResult& lhs, const DimResult& rhs) {
    if (rhs.is_infinite()) return true;
    if (!rhs.decided()) return std::nullopt;
    if (lhs.is_finite()) return lhs.value <= rhs.value;
    if (lhs.is_infinite()) return false;
    if (lhs.value > rhs.value) return false;  // already exceeds the bound
    return std::nullopt;
  }

  static DimResult max(const DimResult& a, const DimResult& b) {
    if (a.is_infinite()) return a;
    if (b.is_infinite()) return b;
    if (!a.decided() || !b.decided()) {
      return at_least(std::max(a.value, b.value));
    }
    return finite(std::max(a.value, b.value));
  }
};

template <typename K>
DimResult pd_of_resolution(const Resolution<K>& res) {
  switch (res.status) {
    case ResolutionStatus::terminated: return DimResult::finite(res.length());
    case ResolutionStatus::periodic:
      return DimResult::infinite(res.periodic_start, res.period);
    case ResolutionStatus::truncated:
      // Depth L reached with a nonzero syzygy, so pd >= L+1.
      return DimResult::at_least(res.length() + 1);
  }
  return DimResult::at_least(0);
}

template <typename K>
DimResult pd(const Module<K>& x, Index cutoff) {
  return pd_of_resolution(minimal_resolution(x, cutoff));
}

template <typename K>
DimResult injdim(const Module<K>& x, Index cutoff) {
  return pd(dual(x), cutoff);
}

template <typename K>
struct GldimResult {
  DimResult value;
  std::vector<DimResult> per_simple;
};

template <typename K>
GldimResult<K> gldim(const AlgPtr<K>& a, Index cutoff) {
  GldimResult<K> out;
  out.value = DimResult::finite(0);
  for (const auto& s : simples(a)) {
    out.per_simple.push_back(pd(s, cutoff));
    out.value = DimResult::max(out.value, out.per_simple.back());
  }
  return out;
}

// --- Ext and Tor ------------------------------------------------------------

/// dim Ext^n(module of res, y) for n = 0..nmax against a precomputed
/// resolution of depth at least nmax+1; entries are nullopt where the
/// resolution could not reach the required depth.
template <typename K>
std::vector<std::optional<long long>> ext_dims_from(const Resolution<K>& res,
                                                    const Module<K>& y, Index nmax) {
  require_same_algebra(res.module.algebra(), y.algebra(), "ext");
  const Index len = res.length();
  const bool complete = res.status != ResolutionStatus::truncated || len >= nmax + 1;

  std::vector<Subspace<K>> homs;  // Hom(P_i, y) for materialized terms
  for (const auto& p : res.terms) homs.push_back(hom_space(p, y));
  auto boundary_rank = [&](Index i) -> Index {  // Hom(P_i,y) -> Hom(P_{i+1},y)
    if (i < 0 || i + 1 > len) return 0;
    const Subspace<K>& hi = homs[i];
    const Subspace<K>& hnext = homs[i + 1];
    if (hi.dim() == 0 || hnext.dim() == 0) return 0;
    Mat<K> delta(hi.dim(), hnext.dim());
    const Mat<K>& d = res.differentials[i + 1];
    for (Index t = 0; t < hi.dim(); ++t) {
      Mat<K> g = unvec<K>(hi.basis().row(t), res.terms[i].dim(), y.dim());
      delta.row(t) = hnext.coords_of(vec<K>(Mat<K>(d * g)));
    }
    return rank(delta);
  };

  std::vector<Index> ranks(nmax + 2, 0);
  for (Index i = 0; i <= nmax; ++i) ranks[i + 1] = boundary_rank(i);
  std::vector<std::optional<long long>> out(nmax + 1);
  for (Index n = 0; n <= nmax; ++n) {
    if (!complete && n + 1 > len) continue;  // undecided
    const Index hn = n <= len ? homs[n].dim() : 0;
    out[n] = hn - ranks[n + 1] - ranks[n];
  }
  return out;
}

template <typename K>
std::vector<std::optional<long long>> ext_dims(const Module<K>& x, const Module<K>& y,
                                               Index nmax) {
  return ext_dims_from(minimal_resolution(x, nmax + 1), y, nmax);
}

/// dim Ext^n(x, y); nullopt when the resolution could not reach depth n+1.
template <typename K>
std::optional<long long> ext_dim(const Module<K>& x, const Module<K>& y, Index n,
                                 Index cutoff = 64) {
  (void)cutoff;
  if (n == 0) return hom_dim(x, y);
  return ext_dims(x, y, n)[n];
}

/// dim Tor_n(m, -) for n = 0..nmax from a precomputed resolution.
template <typename K>
std::vector<std::optional<long long>> tor_dims_from(const Bimodule<K>& m,
                                                    const Resolution<K>& res, Index nmax) {
  require_same_algebra(m.right_algebra(), res.module.algebra(), "tor");
  const Index len = res.length();
  const bool complete = res.status != ResolutionStatus::truncated || len >= nmax + 1;

  std::vector<TensorModule<K>> tensors;
  const Index top = std::min<Index>(nmax + 1, len);
  for (Index i = 0; i <= top; ++i) tensors.push_back(tensor(m, res.terms[i]));

  std::vector<Index> ranks(nmax + 3, 0);
  const Index dm = m.dim();
  for (Index i = 1; i <= std::min<Index>(nmax + 1, top); ++i) {
    Mat<K> plain = kron(Mat<K>(Mat<K>::Identity(dm, dm)), res.differentials[i]);
    ranks[i] = rank(Mat<K>(tensors[i].sp.induce(plain, tensors[i - 1].sp)));
  }

  std::vector<std::optional<long long>> out(nmax + 1);
  for (Index n = 0; n <= nmax; ++n) {
    if (!complete && n + 1 > len) continue;  // undecided
    if (n > top) {
      out[n] = 0;  // resolution terminated below degree n
      continue;
    }
    out[n] = tensors[n].module.dim() - ranks[n] - ranks[n + 1];
  }
  return out;
}

/// dim Tor_n(m, x) for a (B,A)-bimodule m and A-module x.
template <typename K>
std::optional<long long> tor_dim(const Bimodule<K>& m, const Module<K>& x, Index n,
                                 Index cutoff = 64) {
  (void)cutoff;
  return tor_dims_from(m, minimal_resolution(x, n + 1), n)[n];
}

// --- add-approximations ------------------------------------------------------

enum class ApproxSide { left, right };

/// Right: the evaluation G^{Hom(G,x)} -> x; left: x -> G^{Hom(x,G)}.
template <typename K>
ModuleMap<K> add_approximation(const std::vector<Module<K>>& gens, const Module<K>& x,
                               ApproxSide side) {
  if (gens.empty()) throw ModuleError("add approximation needs generators");
  const auto& alg = x.algebra();
  auto g = direct_sum(alg, gens);
  if (side == ApproxSide::right) {
    auto basis = hom_basis(g.module, x);
    const Index t = static_cast<Index>(basis.size());
    std::vector<Module<K>> copies(t, g.module);
    auto power = direct_sum(alg, copies);
    Mat<K> map(power.module.dim(), x.dim());
    for (Index i = 0; i < t; ++i) map.middleRows(i * g.module.dim(), g.module.dim()) = basis[i];
    return ModuleMap<K>(power.module, x, map);
  }
  auto basis = hom_basis(x, g.module);
  const Index t = static_cast<Index>(basis.size());
  std::vector<Module<K>> copies(t, g.module);
  auto power = direct_sum(alg, copies);
  Mat<K> map(x.dim(), power.module.dim());
  for (Index i = 0; i < t; ++i) map.middleCols(i * g.module.dim(), g.module.dim()) = basis[i];
  return ModuleMap<K>(x, power.module, map);
}

/// Factorization check through the approximation, with the factoring map
/// required to be a module map: every f: probe -> target (right side) or
/// source -> probe (left side) must lie in the image of composition with
/// the approximation on the corresponding Hom space.
template <typename K>
bool approximation_factors(const ModuleMap<K>& approx, const Module<K>& probe,
                           ApproxSide side) {
  if (side == ApproxSide::right) {
    auto gammas = hom_basis(probe, approx.source);
    Mat<K> span(static_cast<Index>(gammas.size()), probe.dim() * approx.target.dim());
    for (std::size_t t = 0; t < gammas.size(); ++t)
      span.row(static_cast<Index>(t)) = vec<K>(Mat<K>(gammas[t] * approx.matrix));
    auto reach = image(span);
    for (const auto& f : hom_basis(probe, approx.target))
      if (!reach.contains(vec<K>(f))) return false;
    return true;
  }
  auto gammas = hom_basis(approx.target, probe);
  Mat<K> span(static_cast<Index>(gammas.size()), approx.source.dim() * probe.dim());
  for (std::size_t t = 0; t < gammas.size(); ++t)
    span.row(static_cast<Index>(t)) = vec<K>(Mat<K>(approx.matrix * gammas[t]));
  auto reach = image(span);
  for (const auto& f : hom_basis(approx.source, probe))
    if (!reach.contains(vec<K>(f))) return false;
  return true;
}

}  // namespace moritakit

#pragma once

// Exact module isomorphism testing. Invariant prefilters rule out most
// non-isomorphic pairs; the remaining decision searches for an invertible
// element of Hom(x,y). Over the rationals the grid {0..d}^h decides
// existence (the determinant polynomial has degree at most d in each
// coefficient), over F_p the whole coefficient space is swept.

#include "moritakit/module.hpp"

#include <optional>
#include <vector>

namespace moritakit {

enum class IsoVerdict { iso, not_iso, undecided };

template <typename K>
struct IsoResult {
  IsoVerdict verdict = IsoVerdict::undecided;
  std::optional<Mat<K>> witness;
};

namespace isodetail {

template <typename K>
bool invertible(const Mat<K>& f) {
  return f.rows() == f.cols() && rank(f) == f.rows();
}

template <typename K>
struct GridSearch {
  const std::vector<Mat<K>>* mats;
  std::vector<K> values;  // candidate coefficient values
  long long budget;
  bool exhausted = false;

  std::optional<Mat<K>> run(Mat<K> acc, std::size_t i) {
    if (i == mats->size()) {
      if (--budget < 0) {
        exhausted = true;
        return std::nullopt;
      }
      if (invertible(acc)) return acc;
      return std::nullopt;
    }
    for (const K& v : values) {
      if (exhausted) return std::nullopt;
      Mat<K> next = v == K(0) ? acc : Mat<K>(acc + v * (*mats)[i]);
      if (auto r = run(std::move(next), i + 1)) return r;
    }
    return std::nullopt;
  }
};

template <typename K>
std::vector<K> coefficient_values(const Module<K>& x, Index hom_dim);

template <>
inline std::vector<Rational> coefficient_values(const Module<Rational>& x, Index) {
  std::vector<Rational> vals;
  for (long long v = 0; v <= x.dim(); ++v) vals.push_back(Rational(v));
  return vals;
}

template <>
inline std::vector<Fp> coefficient_values(const Module<Fp>& x, Index) {
  // Recover the modulus from an attached entry of the module or algebra data.
  std::uint32_t p = 0;
  auto scan = [&p](const Mat<Fp>& m) {
    for (Index i = 0; i < m.rows() && p == 0; ++i)
      for (Index j = 0; j < m.cols() && p == 0; ++j) p = m(i, j).modulus();
  };
  for (Index k = 0; k < x.algebra()->dim() && p == 0; ++k) scan(x.action_of_basis(k));
  for (Index k = 0; k < x.algebra()->dim() && p == 0; ++k)
    scan(x.algebra()->left_mult_of_basis(k));
  if (p == 0)
    throw FieldError("prime-field iso search needs at least one attached scalar");
  std::vector<Fp> vals;
  for (std::uint32_t v = 0; v < p; ++v) vals.push_back(Fp(v, p));
  return vals;
}

}  // namespace isodetail

/// Tri-state isomorphism check with an explicit witness on success.
template <typename K>
IsoResult<K> iso_check(const Module<K>& x, const Module<K>& y,
                       long long budget = 1 << 20) {
  require_same_algebra(x.algebra(), y.algebra(), "iso test");
  IsoResult<K> res;
  if (x.dim() != y.dim()) {
    res.verdict = IsoVerdict::not_iso;
    return res;
  }
  if (x.dim() == 0) {
    res.verdict = IsoVerdict::iso;
    res.witness = Mat<K>(0, 0);
    return res;
  }
  // Invariant prefilters: idempotent supports, action traces, radical series.
  const auto alg = x.algebra();
  for (std::size_t i = 0; i < alg->prim_idempotents().size(); ++i)
    if (x.idempotent_part(static_cast<Index>(i)).dim() !=
        y.idempotent_part(static_cast<Index>(i)).dim()) {
      res.verdict = IsoVerdict::not_iso;
      return res;
    }
  for (Index k = 0; k < alg->dim(); ++k)
    if (x.action_of_basis(k).trace() != y.action_of_basis(k).trace()) {
      res.verdict = IsoVerdict::not_iso;
      return res;
    }
  {
    Subspace<K> rx = x.radical_subspace(), ry = y.radical_subspace();
    while (true) {
      if (rx.dim() != ry.dim()) {
        res.verdict = IsoVerdict::not_iso;
        return res;
      }
      if (rx.dim() == 0) break;
      auto step = [](const Module<K>& m, const Subspace<K>& s) {
        const auto& rad = m.algebra()->radical();
        Mat<K> rows(rad.dim() * s.dim(), m.dim());
        for (Index r = 0; r < rad.dim(); ++r)
          rows.middleRows(r * s.dim(), s.dim()) =
              s.basis() * m.action_of(rad.basis().row(r));
        return image(rows);
      };
      rx = step(x, rx);
      ry = step(y, ry);
    }
  }
  auto mats = hom_basis(x, y);
  const Index h = static_cast<Index>(mats.size());
  if (h == 0 || hom_dim(y, x) != h || hom_dim(x, x) != h) {
    res.verdict = IsoVerdict::not_iso;
    return res;
  }
  // Fast paths: single basis elements and the all-ones combination.
  for (const auto& f : mats)
    if (isodetail::invertible(f)) {
      res.verdict = IsoVerdict::iso;
      res.witness = f;
      return res;
    }
  {
    Mat<K> sum = Mat<K>::Zero(x.dim(), y.dim());
    for (const auto& f : mats) sum += f;
    if (isodetail::invertible(sum)) {
      res.verdict = IsoVerdict::iso;
      res.witness = sum;
      return res;
    }
  }
  isodetail::GridSearch<K> search;
  search.mats = &mats;
  search.values = isodetail::coefficient_values<K>(x, h);
  search.budget = budget;
  double space = 1;
  for (Index i = 0; i < h; ++i) space *= static_cast<double>(search.values.size());
  if (space > static_cast<double>(budget)) {
    res.verdict = IsoVerdict::undecided;
    return res;
  }
  if (auto w = search.run(Mat<K>(Mat<K>::Zero(x.dim(), y.dim())), 0)) {
    res.verdict = IsoVerdict::iso;
    res.witness = *w;
    return res;
  }
  res.verdict = search.exhausted ? IsoVerdict::undecided : IsoVerdict::not_iso;
  return res;
}

/// Explicit invertible intertwiner when x ≅ y, absent otherwise; throws when
/// the decision would exceed the search budget.
template <typename K>
std::optional<ModuleMap<K>> iso_test(const Module<K>& x, const Module<K>& y) {
  auto r = iso_check(x, y);
  if (r.verdict == IsoVerdict::undecided)
    throw ModuleError("iso test undecided within search budget");
  if (r.verdict == IsoVerdict::not_iso) return std::nullopt;
  return ModuleMap<K>(x, y, *r.witness);
}

}  // namespace moritakit

#pragma once

// Exact dense linear algebra over a field scalar K. Row-vector convention
// throughout: module elements are rows, linear maps act by right
// multiplication, so composition "f then g" is the matrix product F*G.

#include "moritakit/scalar.hpp"

#include <Eigen/Dense>

#include <optional>
#include <stdexcept>
#include <vector>

namespace moritakit {

template <typename K>
using Mat = Eigen::Matrix<K, Eigen::Dynamic, Eigen::Dynamic>;

template <typename K>
using RowVec = Eigen::Matrix<K, 1, Eigen::Dynamic>;

using Eigen::Index;

class DimensionError : public std::runtime_error {
public:
  explicit DimensionError(const std::string& msg) : std::runtime_error(msg) {}
};

template <typename K>
bool all_zero(const Mat<K>& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != K(0)) return false;
  return true;
}

template <typename K>
bool all_zero(const RowVec<K>& v) {
  for (Index j = 0; j < v.cols(); ++j)
    if (v(j) != K(0)) return false;
  return true;
}

template <typename K>
Mat<K> kron(const Mat<K>& a, const Mat<K>& b) {
  Mat<K> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return r;
}

template <typename K>
struct RrefResult {
  Mat<K> matrix;
  std::vector<Index> pivots;
  Index rank = 0;
};

/// Reduced row-echelon form with leading-one pivots, first nonzero pivot rule.
template <typename K>
RrefResult<K> rref(Mat<K> m) {
  RrefResult<K> out;
  const K zero(0);
  Index rank = 0;
  for (Index col = 0; col < m.cols() && rank < m.rows(); ++col) {
    Index piv = -1;
    for (Index r = rank; r < m.rows(); ++r)
      if (m(r, col) != zero) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    m.row(rank).swap(m.row(piv));
    m.row(rank) /= m(rank, col);
    for (Index r = 0; r < m.rows(); ++r)
      if (r != rank && m(r, col) != zero) m.row(r) -= m(r, col) * m.row(rank);
    out.pivots.push_back(col);
    ++rank;
  }
  out.rank = rank;
  out.matrix = std::move(m);
  return out;
}

template <typename K>
Index rank(const Mat<K>& m) {
  return rref(m).rank;
}

/// Subspace of K^n given by a reduced row-echelon basis.
template <typename K>
class Subspace {
public:
  Subspace() : ambient_(0), basis_(0, 0), pivots_() {}

  static Subspace zero(Index ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Mat<K>(0, ambient);
    return s;
  }

  static Subspace full(Index ambient) {
    return from_span(Mat<K>::Identity(ambient, ambient));
  }

  /// Row space of the given matrix.
  static Subspace from_span(const Mat<K>& rows) {
    auto r = rref(rows);
    Subspace s;
    s.ambient_ = rows.cols();
    s.basis_ = r.matrix.topRows(r.rank);
    s.pivots_ = std::move(r.pivots);
    return s;
  }

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.rows(); }
  const Mat<K>& basis() const { return basis_; }
  const std::vector<Index>& pivots() const { return pivots_; }

  /// Remainder of v after eliminating all pivot coordinates.
  RowVec<K> reduce(RowVec<K> v) const {
    for (Index i = 0; i < basis_.rows(); ++i) {
      const K c = v(pivots_[i]);
      if (c != K(0)) v -= c * basis_.row(i);
    }
    return v;
  }

  bool contains(const RowVec<K>& v) const { return all_zero<K>(reduce(v)); }

  bool contains(const Subspace& other) const {
    for (Index i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_.row(i))) return false;
    return true;
  }

  /// Coordinates of v in the echelon basis; throws if v is outside.
  RowVec<K> coords_of(const RowVec<K>& v) const {
    RowVec<K> c(dim());
    RowVec<K> rem = v;
    for (Index i = 0; i < basis_.rows(); ++i) {
      c(i) = rem(pivots_[i]);
      if (c(i) != K(0)) rem -= c(i) * basis_.row(i);
    }
    if (!all_zero<K>(rem)) throw DimensionError("vector not contained in subspace");
    return c;
  }

  Subspace sum(const Subspace& other) const {
    Mat<K> stacked(dim() + other.dim(), ambient_);
    stacked << basis_, other.basis_;
    return from_span(stacked);
  }

  Subspace intersect(const Subspace& other) const {
    // Zassenhaus: row-reduce [U U; V 0]; rows with zero left half carry the
    // intersection in the right half.
    Mat<K> z(dim() + other.dim(), 2 * ambient_);
    z << basis_, basis_, other.basis_, Mat<K>::Zero(other.dim(), ambient_);
    auto r = rref(z);
    std::vector<Index> keep;
    for (Index i = 0; i < r.rank; ++i)
      if (all_zero<K>(RowVec<K>(r.matrix.row(i).head(ambient_)))) keep.push_back(i);
    Mat<K> rows(static_cast<Index>(keep.size()), ambient_);
    for (Index i = 0; i < rows.rows(); ++i)
      rows.row(i) = r.matrix.row(keep[i]).tail(ambient_);
    return from_span(rows);
  }

  bool operator==(const Subspace& other) const {
    return ambient_ == other.ambient_ && basis_.rows() == other.basis_.rows() &&
           basis_ == other.basis_;
  }

private:
  Index ambient_;
  Mat<K> basis_;
  std::vector<Index> pivots_;
};

/// Left kernel {v : v*m = 0} as a subspace of K^rows(m).
template <typename K>
Subspace<K> kernel(const Mat<K>& m) {
  const Index n = m.rows();
  Mat<K> aug(n, m.cols() + n);
  aug << m, Mat<K>::Identity(n, n);
  auto r = rref(aug);
  std::vector<Index> keep;
  for (Index i = 0; i < n; ++i)
    if (all_zero<K>(RowVec<K>(r.matrix.row(i).head(m.cols())))) keep.push_back(i);
  Mat<K> rows(static_cast<Index>(keep.size()), n);
  for (Index i = 0; i < rows.rows(); ++i)
    rows.row(i) = r.matrix.row(keep[i]).tail(n);
  return Subspace<K>::from_span(rows);
}

/// Row space of m as a subspace of K^cols(m).
template <typename K>
Subspace<K> image(const Mat<K>& m) {
  return Subspace<K>::from_span(m);
}

template <typename K>
struct QuotientMaps {
  Mat<K> projection;  // ambient x q, kills the subspace
  Mat<K> section;     // q x ambient, projection∘section = identity on the quotient
};

/// Quotient of K^ambient by s, realized on the non-pivot coordinates.
template <typename K>
QuotientMaps<K> quotient(Index ambient_dim, const Subspace<K>& s) {
  if (s.ambient_dim() != ambient_dim)
    throw DimensionError("quotient: subspace ambient dimension mismatch");
  std::vector<Index> complement;
  {
    std::vector<bool> is_pivot(ambient_dim, false);
    for (Index p : s.pivots()) is_pivot[p] = true;
    for (Index j = 0; j < ambient_dim; ++j)
      if (!is_pivot[j]) complement.push_back(j);
  }
  const Index q = static_cast<Index>(complement.size());
  QuotientMaps<K> maps;
  maps.projection = Mat<K>(ambient_dim, q);
  for (Index i = 0; i < ambient_dim; ++i) {
    RowVec<K> e = RowVec<K>::Zero(ambient_dim);
    e(i) = K(1);
    RowVec<K> red = s.reduce(e);
    for (Index j = 0; j < q; ++j) maps.projection(i, j) = red(complement[j]);
  }
  maps.section = Mat<K>::Zero(q, ambient_dim);
  for (Index j = 0; j < q; ++j) maps.section(j, complement[j]) = K(1);
  return maps;
}

// Solving x*a = b row by row: row-reduce [a | I] so the elimination steps on
// the rows of a are recorded in the right half, then express each row of b in
// the reduced rows.
template <typename K>
struct SolveLU {
  RrefResult<K> red;
  Mat<K> trans;  // trans * a = red.matrix
};

template <typename K>
SolveLU<K> solve_decompose(const Mat<K>& a) {
  const Index n = a.rows();
  Mat<K> aug(n, a.cols() + n);
  aug << a, Mat<K>::Identity(n, n);
  auto r = rref(aug);
  SolveLU<K> lu;
  lu.red.matrix = r.matrix.leftCols(a.cols());
  lu.trans = r.matrix.rightCols(n);
  lu.red.rank = 0;
  for (Index i = 0; i < n; ++i) {
    Index c = 0;
    while (c < a.cols() && lu.red.matrix(i, c) == K(0)) ++c;
    if (c < a.cols()) {
      lu.red.pivots.push_back(c);
      ++lu.red.rank;
    }
  }
  return lu;
}

template <typename K>
std::optional<Mat<K>> solve_with(const SolveLU<K>& lu, const Mat<K>& b) {
  if (lu.red.matrix.cols() != b.cols()) throw DimensionError("solve: column count mismatch");
  Mat<K> x = Mat<K>::Zero(b.rows(), lu.trans.cols());
  for (Index i = 0; i < b.rows(); ++i) {
    RowVec<K> rem = b.row(i);
    RowVec<K> comb = RowVec<K>::Zero(lu.trans.cols());
    for (Index k = 0; k < lu.red.rank; ++k) {
      const K c = rem(lu.red.pivots[k]);
      if (c != K(0)) {
        rem -= c * lu.red.matrix.row(k);
        comb += c * lu.trans.row(k);
      }
    }
    if (!all_zero<K>(rem)) return std::nullopt;
    x.row(i) = comb;
  }
  return x;
}

/// Solves x*a = b exactly; returns nullopt when unsolvable.
template <typename K>
std::optional<Mat<K>> solve(const Mat<K>& a, const Mat<K>& b) {
  if (a.cols() != b.cols()) throw DimensionError("solve: column count mismatch");
  return solve_with(solve_decompose(a), b);
}

/// Inverse of a square matrix, when it exists.
template <typename K>
std::optional<Mat<K>> inverse(const Mat<K>& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  auto x = solve(a, Mat<K>(Mat<K>::Identity(a.rows(), a.rows())));
  return x;  // x*a = I forces a invertible for square a
}

}  // namespace moritakit

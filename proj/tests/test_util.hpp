#pragma once

// Shared test helpers: matrix literals and a deterministic generator for
// property-style sweeps.

#include "moritakit/linalg.hpp"

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace moritakit::testutil {

template <typename K>
Mat<K> mat(std::initializer_list<std::initializer_list<long long>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  Mat<K> m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (long long v : row) m(i, j++) = K(v);
    ++i;
  }
  return m;
}

template <typename K>
RowVec<K> rowvec(std::initializer_list<long long> entries) {
  RowVec<K> v(static_cast<Index>(entries.size()));
  Index j = 0;
  for (long long e : entries) v(j++) = K(e);
  return v;
}

/// xorshift-based generator, fixed seed per test for reproducibility.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next() {
    state_ ^= state_ << 13;
    state_ ^= state_ >> 7;
    state_ ^= state_ << 17;
    return state_;
  }

  long long range(long long lo, long long hi) {  // inclusive bounds
    return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

private:
  std::uint64_t state_;
};

template <typename K>
Mat<K> random_mat(Rng& rng, Index rows, Index cols, long long lo = -3, long long hi = 3) {
  Mat<K> m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = K(rng.range(lo, hi));
  return m;
}

}  // namespace moritakit::testutil

#pragma once

// Programmatic builders for the quiver algebras used across the test suites.
// Relations are stored as arrow sequences in composition order (left to
// right); the written form "ba" in functional notation is the sequence a,b.

#include "moritakit/algebra.hpp"

#include <string>
#include <vector>

namespace moritakit::fixtures {

template <typename K>
Relation<K> monomial(const Quiver& q, const std::vector<std::string>& arrows) {
  std::vector<int> seq;
  for (const auto& a : arrows) seq.push_back(q.arrow_index(a));
  return Relation<K>{{{K(1), Path::of_arrows(q, seq)}}};
}

template <typename K>
Relation<K> binomial(const Quiver& q, const std::vector<std::string>& plus,
                     const std::vector<std::string>& minus) {
  std::vector<int> p, m;
  for (const auto& a : plus) p.push_back(q.arrow_index(a));
  for (const auto& a : minus) m.push_back(q.arrow_index(a));
  return Relation<K>{{{K(1), Path::of_arrows(q, p)}, {K(-1), Path::of_arrows(q, m)}}};
}

/// The base field as a one-vertex quiver algebra.
template <typename K>
AlgPtr<K> base_field() {
  Presentation<K> p;
  p.quiver.vertices = {"v"};
  p.truncation_length = 2;
  return build_path_algebra(p, "K");
}

/// K[x]/(x^2): one vertex, one loop, loop squared.
template <typename K>
AlgPtr<K> dual_numbers() {
  Presentation<K> p;
  p.quiver.vertices = {"v"};
  p.quiver.arrows = {{"x", 0, 0}};
  p.relations = {monomial<K>(p.quiver, {"x", "x"})};
  p.truncation_length = 2;
  return build_path_algebra(p, "K[x]/(x^2)");
}

/// Path algebra of the A2 quiver 1 -> 2 (hereditary, gldim 1).
template <typename K>
AlgPtr<K> a2_path_algebra() {
  Presentation<K> p;
  p.quiver.vertices = {"1", "2"};
  p.quiver.arrows = {{"b", 0, 1}};
  p.truncation_length = 2;
  return build_path_algebra(p, "KA2");
}

/// Two vertices with arrows both ways and radical square zero; the
/// 4-dimensional selfinjective algebra of infinite global dimension.
template <typename K>
AlgPtr<K> ex5_1_algebra() {
  Presentation<K> p;
  p.quiver.vertices = {"v", "w"};
  p.quiver.arrows = {{"a", 0, 1}, {"b", 1, 0}};
  p.relations = {monomial<K>(p.quiver, {"a", "b"}), monomial<K>(p.quiver, {"b", "a"})};
  p.truncation_length = 2;
  return build_path_algebra(p, "ex5_1");
}

/// Oriented 3-cycle with radical square zero (selfinjective Nakayama).
template <typename K>
AlgPtr<K> ex3_9_algebra() {
  Presentation<K> p;
  p.quiver.vertices = {"v1", "v2", "v3"};
  p.quiver.arrows = {{"a", 0, 1}, {"b", 1, 2}, {"c", 2, 0}};
  p.relations = {monomial<K>(p.quiver, {"a", "b"}), monomial<K>(p.quiver, {"b", "c"}),
                 monomial<K>(p.quiver, {"c", "a"})};
  p.truncation_length = 2;
  return build_path_algebra(p, "ex3_9");
}

/// The selfinjective biserial algebra on two vertices with loops.
template <typename K>
AlgPtr<K> ex4_13_algebra() {
  Presentation<K> p;
  p.quiver.vertices = {"v1", "v2"};
  p.quiver.arrows = {{"a", 0, 0}, {"b", 0, 1}, {"c", 1, 0}, {"d", 1, 1}};
  p.relations = {monomial<K>(p.quiver, {"a", "a"}),
                 monomial<K>(p.quiver, {"b", "c"}),
                 monomial<K>(p.quiver, {"c", "b"}),
                 monomial<K>(p.quiver, {"d", "d"}),
                 binomial<K>(p.quiver, {"a", "b"}, {"b", "d"}),
                 binomial<K>(p.quiver, {"d", "c"}, {"c", "a"})};
  p.truncation_length = 3;
  return build_path_algebra(p, "ex4_13");
}

/// Eight-vertex radical-square-zero algebra of global dimension 4.
template <typename K>
AlgPtr<K> ex5_10_algebra() {
  Presentation<K> p;
  p.quiver.vertices = {"v1", "v2", "v3", "v4", "w1", "w2", "w3", "w4"};
  p.quiver.arrows = {{"a", 0, 4}, {"b", 1, 2}, {"c", 2, 3}, {"d", 4, 5},
                     {"e", 6, 5}, {"f", 6, 7}, {"g", 7, 1}};
  p.relations = {monomial<K>(p.quiver, {"a", "d"}), monomial<K>(p.quiver, {"b", "c"}),
                 monomial<K>(p.quiver, {"f", "g"}), monomial<K>(p.quiver, {"g", "b"})};
  p.truncation_length = 2;
  return build_path_algebra(p, "ex5_10");
}

/// Five-vertex radical-square-zero algebra of global dimension 2.
template <typename K>
AlgPtr<K> ex5_11_algebra() {
  Presentation<K> p;
  p.quiver.vertices = {"v1", "v2", "v3", "w1", "w2"};
  p.quiver.arrows = {{"a", 0, 1}, {"b", 1, 2}, {"c", 0, 4}, {"d", 3, 1}, {"e", 3, 4}};
  p.relations = {monomial<K>(p.quiver, {"a", "b"}), monomial<K>(p.quiver, {"d", "b"})};
  p.truncation_length = 2;
  return build_path_algebra(p, "ex5_11");
}

/// The A5 chain with radical square zero (global dimension 4).
template <typename K>
AlgPtr<K> ex5_15_algebra() {
  Presentation<K> p;
  p.quiver.vertices = {"v1", "v2", "v3", "v4", "v5"};
  p.quiver.arrows = {{"al", 0, 1}, {"ga", 1, 2}, {"be", 2, 3}, {"de", 3, 4}};
  p.relations = {monomial<K>(p.quiver, {"al", "ga"}), monomial<K>(p.quiver, {"ga", "be"}),
                 monomial<K>(p.quiver, {"be", "de"})};
  p.truncation_length = 2;
  return build_path_algebra(p, "ex5_15");
}

/// Sum of a label subset of primitive idempotents (for Pierce splits).
template <typename K>
RowVec<K> idempotent_sum(const AlgPtr<K>& a, const std::vector<int>& indices) {
  RowVec<K> e = RowVec<K>::Zero(a->dim());
  for (int i : indices) e += a->prim_idempotents()[i];
  return e;
}

}  // namespace moritakit::fixtures

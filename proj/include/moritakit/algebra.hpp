#pragma once

// Finite-dimensional associative unital algebras by structure constants,
// with primitive idempotents and a verified radical.
//
// Convention: elements are coefficient rows over the basis. left_mult(i) is
// the matrix of y ↦ e_i·y acting on rows from the right, so for a left module
// action written the same way, action(u·v) = action(v)·action(u).

#include "moritakit/linalg.hpp"
#include "moritakit/quiver.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace moritakit {

class AlgebraError : public std::runtime_error {
public:
  explicit AlgebraError(const std::string& msg) : std::runtime_error(msg) {}
};

class AdmissibilityError : public AlgebraError {
public:
  explicit AdmissibilityError(const std::string& msg) : AlgebraError(msg) {}
};

template <typename K>
class Algebra;

template <typename K>
using AlgPtr = std::shared_ptr<const Algebra<K>>;

template <typename K>
class Algebra {
public:
  struct Data {
    std::string name;
    std::vector<std::string> basis_labels;
    std::vector<Mat<K>> left_mult;  // left_mult[i].row(j) = e_i * e_j
    RowVec<K> unit;
    std::vector<RowVec<K>> prim_idempotents;
    Subspace<K> radical;
  };

  static AlgPtr<K> create(Data d) {
    auto a = AlgPtr<K>(new Algebra<K>(std::move(d)));
    a->validate();
    return a;
  }

  /// Unvalidated value for staging computations (e.g. picking a radical
  /// candidate before create()).
  static Algebra<K> probe(Data d) { return Algebra<K>(std::move(d)); }

  Index dim() const { return static_cast<Index>(d_.basis_labels.size()); }
  const std::string& name() const { return d_.name; }
  const std::vector<std::string>& basis_labels() const { return d_.basis_labels; }
  const RowVec<K>& unit() const { return d_.unit; }
  const std::vector<RowVec<K>>& prim_idempotents() const { return d_.prim_idempotents; }
  const Subspace<K>& radical() const { return d_.radical; }

  const Mat<K>& left_mult_of_basis(Index i) const { return d_.left_mult[i]; }

  RowVec<K> basis_element(Index i) const {
    RowVec<K> e = RowVec<K>::Zero(dim());
    e(i) = K(1);
    return e;
  }

  /// Matrix of y ↦ x·y on coefficient rows.
  Mat<K> left_mult_matrix(const RowVec<K>& x) const {
    Mat<K> m = Mat<K>::Zero(dim(), dim());
    for (Index i = 0; i < dim(); ++i)
      if (x(i) != K(0)) m += x(i) * d_.left_mult[i];
    return m;
  }

  /// Matrix of x ↦ x·y on coefficient rows.
  Mat<K> right_mult_matrix(const RowVec<K>& y) const {
    Mat<K> m(dim(), dim());
    for (Index i = 0; i < dim(); ++i) m.row(i) = y * d_.left_mult[i];
    return m;
  }

  RowVec<K> mul(const RowVec<K>& x, const RowVec<K>& y) const {
    RowVec<K> r = RowVec<K>::Zero(dim());
    for (Index i = 0; i < dim(); ++i)
      if (x(i) != K(0)) r += x(i) * (y * d_.left_mult[i]);
    return r;
  }

  RowVec<K> pow(RowVec<K> x, int n) const {
    RowVec<K> r = d_.unit;
    for (int i = 0; i < n; ++i) r = mul(r, x);
    return r;
  }

  bool is_idempotent(const RowVec<K>& e) const { return mul(e, e) == e; }

  /// Exhaustive structural checks: associativity and unit on all basis
  /// triples, idempotent axioms, and the radical (ideal, nilpotent,
  /// semisimple quotient).
  void validate() const {
    const Index n = dim();
    if (n == 0) throw AlgebraError("algebra must contain a unit");
    if (d_.unit.cols() != n) throw AlgebraError("unit has wrong dimension");
    if (left_mult_matrix(d_.unit) != Mat<K>::Identity(n, n) ||
        right_mult_matrix(d_.unit) != Mat<K>::Identity(n, n))
      throw AlgebraError("unit axiom fails");
    // Associativity on all basis triples, accumulating only over nonzero
    // structure constants.
    const K zero(0);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        const auto& tij = d_.left_mult[i].row(j);
        for (Index k = 0; k < n; ++k) {
          RowVec<K> lhs = RowVec<K>::Zero(n);
          for (Index l = 0; l < n; ++l)
            if (tij(l) != zero) lhs += tij(l) * d_.left_mult[l].row(k);
          RowVec<K> rhs = RowVec<K>::Zero(n);
          const auto& tjk = d_.left_mult[j].row(k);
          for (Index m = 0; m < n; ++m)
            if (tjk(m) != zero) rhs += tjk(m) * d_.left_mult[i].row(m);
          if (lhs != rhs) throw AlgebraError("associativity fails on basis triple");
        }
      }
    RowVec<K> sum = RowVec<K>::Zero(n);
    for (const auto& e : d_.prim_idempotents) {
      if (!is_idempotent(e)) throw AlgebraError("declared idempotent is not idempotent");
      sum += e;
    }
    for (std::size_t i = 0; i < d_.prim_idempotents.size(); ++i)
      for (std::size_t j = 0; j < d_.prim_idempotents.size(); ++j)
        if (i != j && !all_zero<K>(RowVec<K>(
                          mul(d_.prim_idempotents[i], d_.prim_idempotents[j]))))
          throw AlgebraError("idempotents are not orthogonal");
    if (sum != d_.unit) throw AlgebraError("idempotents do not sum to the unit");
    validate_radical();
  }

  int loewy_length() const {
    Subspace<K> power = d_.radical;
    int n = 1;
    while (power.dim() > 0) {
      power = multiply_subspaces(power, d_.radical);
      ++n;
    }
    return n;
  }

  Subspace<K> multiply_subspaces(const Subspace<K>& u, const Subspace<K>& v) const {
    Mat<K> rows(u.dim() * v.dim(), dim());
    for (Index i = 0; i < u.dim(); ++i)
      for (Index j = 0; j < v.dim(); ++j)
        rows.row(i * v.dim() + j) = mul(u.basis().row(i), v.basis().row(j));
    return Subspace<K>::from_span(rows);
  }

  /// Two-sided ideal check for a subspace.
  bool is_ideal(const Subspace<K>& s) const {
    for (Index i = 0; i < s.dim(); ++i)
      for (Index k = 0; k < dim(); ++k) {
        if (!s.contains(mul(basis_element(k), s.basis().row(i)))) return false;
        if (!s.contains(mul(s.basis().row(i), basis_element(k)))) return false;
      }
    return true;
  }

  bool is_nilpotent_ideal(const Subspace<K>& s) const {
    if (!is_ideal(s)) return false;
    Subspace<K> power = s;
    for (Index step = 0; step <= dim(); ++step) {
      if (power.dim() == 0) return true;
      power = multiply_subspaces(power, s);
    }
    return false;
  }

  /// Radical of the bilinear form (x,y) ↦ tr(L_{xy}); contains the Jacobson
  /// radical over any field and equals it in characteristic zero.
  Subspace<K> trace_form_radical() const {
    const Index n = dim();
    RowVec<K> traces(n);
    for (Index k = 0; k < n; ++k) traces(k) = d_.left_mult[k].trace();
    Mat<K> gram(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        K acc(0);
        for (Index k = 0; k < n; ++k) acc += d_.left_mult[i](j, k) * traces(k);
        gram(i, j) = acc;
      }
    return kernel(gram);
  }

private:
  explicit Algebra(Data d) : d_(std::move(d)) {}

  void validate_radical() const {
    const auto& J = d_.radical;
    if (J.ambient_dim() != dim()) throw AlgebraError("radical has wrong ambient dimension");
    if (!is_nilpotent_ideal(J)) throw AlgebraError("radical is not a nilpotent ideal");
    // Split case: quotient dimension equals the number of idempotents.
    if (static_cast<Index>(d_.prim_idempotents.size()) + J.dim() == dim()) return;
    // Otherwise the quotient must have vanishing trace-form radical, which
    // forces it semisimple over any field.
    auto q = quotient_by_ideal(J);
    if (q->trace_form_radical().dim() != 0)
      throw AlgebraError("radical quotient not certified semisimple");
  }

  AlgPtr<K> quotient_by_ideal(const Subspace<K>& J) const;

  Data d_;

  mutable std::once_flag op_once_;
  mutable AlgPtr<K> op_fwd_;
  mutable std::weak_ptr<const Algebra<K>> op_back_;

  template <typename K2>
  friend AlgPtr<K2> opposite(const AlgPtr<K2>& a);
};

/// Opposite algebra; involutive on the nose through a cached back link.
template <typename K>
AlgPtr<K> opposite(const AlgPtr<K>& a) {
  if (auto back = a->op_back_.lock()) return back;
  std::call_once(a->op_once_, [&] {
    typename Algebra<K>::Data d;
    d.name = a->name().empty() ? "" : a->name() + "^op";
    d.basis_labels = a->basis_labels();
    d.unit = a->unit();
    d.prim_idempotents = a->prim_idempotents();
    d.radical = a->radical();
    d.left_mult.resize(a->dim());
    for (Index i = 0; i < a->dim(); ++i) {
      d.left_mult[i] = Mat<K>(a->dim(), a->dim());
      for (Index j = 0; j < a->dim(); ++j)
        d.left_mult[i].row(j) = a->left_mult_of_basis(j).row(i);
    }
    auto op = Algebra<K>::create(std::move(d));
    op->op_back_ = a;
    a->op_fwd_ = op;
  });
  return a->op_fwd_;
}

template <typename K>
AlgPtr<K> Algebra<K>::quotient_by_ideal(const Subspace<K>& J) const {
  auto maps = quotient(dim(), J);
  const Index q = maps.projection.cols();
  Data d;
  d.basis_labels.reserve(q);
  for (Index i = 0; i < q; ++i) d.basis_labels.push_back("q" + std::to_string(i));
  d.unit = d_.unit * maps.projection;
  d.left_mult.resize(q);
  for (Index i = 0; i < q; ++i) {
    d.left_mult[i] = Mat<K>(q, q);
    for (Index j = 0; j < q; ++j)
      d.left_mult[i].row(j) =
          mul(maps.section.row(i), maps.section.row(j)) * maps.projection;
  }
  d.radical = Subspace<K>::zero(q);
  // Bypass create(): this helper is used while validating radicals, so
  // the quotient is built raw and only its trace form is consulted.
  return AlgPtr<K>(new Algebra<K>(std::move(d)));
}

/// Exposed for tests and for radical fallbacks in constructors: the candidate
/// radical verified by the ideal/nilpotency/quotient chain.
template <typename K>
std::optional<Subspace<K>> certify_radical(const Algebra<K>& raw, const Subspace<K>& candidate);

// --- constructors ---------------------------------------------------------

template <typename K>
AlgPtr<K> build_path_algebra(const Presentation<K>& pres, std::string name = "");

template <typename K>
AlgPtr<K> pierce_corner(const AlgPtr<K>& a, const RowVec<K>& e);

template <typename K>
AlgPtr<K> product_algebra(const AlgPtr<K>& a, const AlgPtr<K>& b);

template <typename K>
struct AlgebraIso {
  AlgPtr<K> source;
  AlgPtr<K> target;
  Mat<K> matrix;  // row-convention basis change, source coords to target coords

  AlgebraIso(AlgPtr<K> src, AlgPtr<K> tgt, Mat<K> m)
      : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
    verify();
  }

  void verify() const {
    if (matrix.rows() != source->dim() || matrix.cols() != target->dim())
      throw AlgebraError("iso matrix has wrong shape");
    if (!inverse(matrix).has_value()) throw AlgebraError("iso matrix is singular");
    if (source->unit() * matrix != target->unit())
      throw AlgebraError("iso does not preserve the unit");
    for (Index i = 0; i < source->dim(); ++i)
      for (Index j = 0; j < source->dim(); ++j) {
        RowVec<K> lhs = source->left_mult_of_basis(i).row(j) * matrix;
        RowVec<K> rhs = target->mul(matrix.row(i), matrix.row(j));
        if (lhs != rhs) throw AlgebraError("iso does not intertwine multiplication");
      }
  }
};

template <typename K>
std::optional<Subspace<K>> certify_radical(const Algebra<K>& raw, const Subspace<K>& candidate) {
  if (!raw.is_nilpotent_ideal(candidate)) return std::nullopt;
  return candidate;
}

template <typename K>
AlgPtr<K> build_path_algebra(const Presentation<K>& pres, std::string name) {
  const Quiver& q = pres.quiver;
  q.validate();
  const int L = pres.truncation_length;
  if (L < 2) throw AlgebraError("truncation length must be at least 2");

  // Split relations into (source, target)-uniform components; the two-sided
  // ideal generated is unchanged.
  std::vector<Relation<K>> uniform;
  for (std::size_t ri = 0; ri < pres.relations.size(); ++ri) {
    std::map<std::pair<int, int>, Relation<K>> parts;
    for (const auto& term : pres.relations[ri].terms) {
      if (term.path.length() < 2 || term.path.length() > L)
        throw AlgebraError("relation " + std::to_string(ri) +
                           " has a path of length outside [2, truncation]");
      parts[{term.path.source, term.path.target}].terms.push_back(term);
    }
    for (auto& [key, rel] : parts) uniform.push_back(std::move(rel));
  }

  const std::vector<Path> paths = enumerate_paths(q, L + 1);  // lengths <= L
  std::map<std::vector<int>, Index> index_of;
  Index short_count = 0;
  for (Index i = 0; i < static_cast<Index>(paths.size()); ++i) {
    index_of[paths[i].arrows.empty()
                 ? std::vector<int>{-1 - paths[i].source}
                 : paths[i].arrows] = i;
    if (paths[i].length() < L) ++short_count;
  }
  auto path_index = [&](const Path& p) -> Index {
    if (p.arrows.empty()) return index_of.at(std::vector<int>{-1 - p.source});
    return index_of.at(p.arrows);
  };

  // Ideal span in the length <= L window: u·r·v with overlong terms dropped.
  std::vector<RowVec<K>> span_rows;
  for (const auto& rel : uniform) {
    const int rsrc = rel.terms.front().path.source;
    const int rtgt = rel.terms.front().path.target;
    for (const auto& u : paths) {
      if (u.target != rsrc) continue;
      for (const auto& v : paths) {
        if (v.source != rtgt) continue;
        RowVec<K> row = RowVec<K>::Zero(static_cast<Index>(paths.size()));
        bool nonzero = false;
        for (const auto& term : rel.terms) {
          const int total = u.length() + term.path.length() + v.length();
          if (total > L) continue;
          Path cat;
          cat.source = u.source;
          cat.target = v.target;
          cat.arrows = u.arrows;
          cat.arrows.insert(cat.arrows.end(), term.path.arrows.begin(), term.path.arrows.end());
          cat.arrows.insert(cat.arrows.end(), v.arrows.begin(), v.arrows.end());
          row(path_index(cat)) += term.coefficient;
          nonzero = true;
        }
        if (nonzero && !all_zero<K>(row)) span_rows.push_back(std::move(row));
      }
    }
  }
  Mat<K> span_mat(static_cast<Index>(span_rows.size()), static_cast<Index>(paths.size()));
  for (Index i = 0; i < span_mat.rows(); ++i) span_mat.row(i) = span_rows[i];
  Subspace<K> ideal_window = Subspace<K>::from_span(span_mat);

  // Admissibility: every path of length exactly L must lie in the window span.
  for (const auto& p : paths)
    if (p.length() == L) {
      RowVec<K> e = RowVec<K>::Zero(static_cast<Index>(paths.size()));
      e(path_index(p)) = K(1);
      if (!ideal_window.contains(e))
        throw AdmissibilityError("length-" + std::to_string(L) + " path " + p.label(q) +
                                 " does not lie in the relation ideal");
    }

  // Restrict to paths of length < L (the ordering puts them first).
  Mat<K> short_span(span_mat.rows(), short_count);
  for (Index i = 0; i < span_mat.rows(); ++i)
    short_span.row(i) = span_rows[i].head(short_count);
  Subspace<K> rel_span = Subspace<K>::from_span(short_span);
  auto maps = quotient(short_count, rel_span);
  const Index dim = maps.projection.cols();

  std::vector<Index> survivor;  // surviving path index per basis slot
  {
    std::vector<bool> is_pivot(short_count, false);
    for (Index p : rel_span.pivots()) is_pivot[p] = true;
    for (Index i = 0; i < short_count; ++i)
      if (!is_pivot[i]) survivor.push_back(i);
  }

  typename Algebra<K>::Data d;
  d.name = std::move(name);
  for (Index s : survivor) d.basis_labels.push_back(paths[s].label(q));

  auto class_of = [&](const Path& p) -> RowVec<K> {
    if (p.length() >= L) return RowVec<K>::Zero(dim);
    return maps.projection.row(path_index(p));
  };

  d.left_mult.assign(dim, Mat<K>::Zero(dim, dim));
  for (Index i = 0; i < dim; ++i)
    for (Index j = 0; j < dim; ++j) {
      const Path& p = paths[survivor[i]];
      const Path& r = paths[survivor[j]];
      if (p.target != r.source) continue;
      Path cat;
      cat.source = p.source;
      cat.target = r.target;
      cat.arrows = p.arrows;
      cat.arrows.insert(cat.arrows.end(), r.arrows.begin(), r.arrows.end());
      d.left_mult[i].row(j) = class_of(cat);
    }

  const Index nv = static_cast<Index>(q.vertices.size());
  d.unit = RowVec<K>::Zero(dim);
  for (Index v = 0; v < nv; ++v) {
    // Vertices are never pivots of the relation span, so they survive as the
    // first nv basis slots.
    d.unit(v) = K(1);
    RowVec<K> e = RowVec<K>::Zero(dim);
    e(v) = K(1);
    d.prim_idempotents.push_back(e);
  }
  Mat<K> rad_rows = Mat<K>::Zero(dim - nv, dim);
  for (Index i = nv; i < dim; ++i) rad_rows(i - nv, i) = K(1);
  d.radical = Subspace<K>::from_span(rad_rows);

  return Algebra<K>::create(std::move(d));
}

template <typename K>
struct CornerAlgebra {
  AlgPtr<K> alg;
  Subspace<K> embed;  // corner basis as rows inside the ambient algebra
};

template <typename K>
CornerAlgebra<K> pierce_corner_with_embedding(const AlgPtr<K>& a, const RowVec<K>& e);

template <typename K>
AlgPtr<K> pierce_corner(const AlgPtr<K>& a, const RowVec<K>& e) {
  return pierce_corner_with_embedding(a, e).alg;
}

template <typename K>
CornerAlgebra<K> pierce_corner_with_embedding(const AlgPtr<K>& a, const RowVec<K>& e) {
  if (!a->is_idempotent(e)) throw AlgebraError("pierce corner requires an idempotent");
  Mat<K> sandwich = a->left_mult_matrix(e) * a->right_mult_matrix(e);  // x ↦ e·x·e
  Subspace<K> corner = image(sandwich);
  const Index n = corner.dim();

  typename Algebra<K>::Data d;
  d.name = a->name().empty() ? "" : "corner(" + a->name() + ")";
  for (Index i = 0; i < n; ++i) d.basis_labels.push_back("c" + std::to_string(i));
  d.left_mult.assign(n, Mat<K>::Zero(n, n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      d.left_mult[i].row(j) =
          corner.coords_of(a->mul(corner.basis().row(i), corner.basis().row(j)));
  d.unit = corner.coords_of(e);
  for (const auto& f : a->prim_idempotents()) {
    RowVec<K> efe = a->mul(e, a->mul(f, e));
    if (efe == f) d.prim_idempotents.push_back(corner.coords_of(f));
  }
  Mat<K> rad_rows(a->radical().dim(), a->dim());
  for (Index i = 0; i < rad_rows.rows(); ++i)
    rad_rows.row(i) = a->radical().basis().row(i) * sandwich;
  Subspace<K> erade = Subspace<K>::from_span(rad_rows);
  Mat<K> rad_coords(erade.dim(), n);
  for (Index i = 0; i < erade.dim(); ++i)
    rad_coords.row(i) = corner.coords_of(erade.basis().row(i));
  d.radical = Subspace<K>::from_span(rad_coords);

  return {Algebra<K>::create(std::move(d)), std::move(corner)};
}

template <typename K>
AlgPtr<K> product_algebra(const AlgPtr<K>& a, const AlgPtr<K>& b) {
  const Index na = a->dim(), nb = b->dim(), n = na + nb;
  typename Algebra<K>::Data d;
  for (const auto& l : a->basis_labels()) d.basis_labels.push_back("l." + l);
  for (const auto& l : b->basis_labels()) d.basis_labels.push_back("r." + l);
  d.left_mult.assign(n, Mat<K>::Zero(n, n));
  for (Index i = 0; i < na; ++i)
    d.left_mult[i].topLeftCorner(na, na) = a->left_mult_of_basis(i);
  for (Index i = 0; i < nb; ++i)
    d.left_mult[na + i].bottomRightCorner(nb, nb) = b->left_mult_of_basis(i);
  d.unit = RowVec<K>::Zero(n);
  d.unit.head(na) = a->unit();
  d.unit.tail(nb) = b->unit();
  for (const auto& e : a->prim_idempotents()) {
    RowVec<K> x = RowVec<K>::Zero(n);
    x.head(na) = e;
    d.prim_idempotents.push_back(x);
  }
  for (const auto& e : b->prim_idempotents()) {
    RowVec<K> x = RowVec<K>::Zero(n);
    x.tail(nb) = e;
    d.prim_idempotents.push_back(x);
  }
  Mat<K> rad = Mat<K>::Zero(a->radical().dim() + b->radical().dim(), n);
  rad.topLeftCorner(a->radical().dim(), na) = a->radical().basis();
  rad.bottomRightCorner(b->radical().dim(), nb) = b->radical().basis();
  d.radical = Subspace<K>::from_span(rad);
  return Algebra<K>::create(std::move(d));
}

}  // namespace moritakit

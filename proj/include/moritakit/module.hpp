#pragma once

// Finite-dimensional left modules, bimodules, and the Hom/tensor/duality
// machinery between them.
//
// A module element is a coefficient row; action(k) is the matrix of
// x ↦ e_k·x acting from the right, so action(u·v) = action(v)·action(u).

#include "moritakit/algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace moritakit {

class ModuleError : public std::runtime_error {
public:
  explicit ModuleError(const std::string& msg) : std::runtime_error(msg) {}
};

template <typename K>
void require_same_algebra(const AlgPtr<K>& a, const AlgPtr<K>& b, const char* where) {
  if (a.get() != b.get()) throw ModuleError(std::string(where) + ": algebra mismatch");
}

template <typename K>
class Module {
public:
  Module() = default;

  Module(AlgPtr<K> alg, std::vector<Mat<K>> action, std::string name = "")
      : alg_(std::move(alg)), action_(std::move(action)), name_(std::move(name)) {
    dim_ = action_.empty() ? 0 : action_[0].rows();
    validate();
  }

  /// For actions that are valid by construction (restrictions, quotients,
  /// sums, transports of validated modules); skips the table check.
  static Module unchecked(AlgPtr<K> alg, std::vector<Mat<K>> action, std::string name = "") {
    Module m;
    m.alg_ = std::move(alg);
    m.action_ = std::move(action);
    m.name_ = std::move(name);
    m.dim_ = m.action_.empty() ? 0 : m.action_[0].rows();
    return m;
  }

  static Module zero(AlgPtr<K> alg) {
    std::vector<Mat<K>> act(alg->dim(), Mat<K>(0, 0));
    return unchecked(std::move(alg), std::move(act), "0");
  }

  const AlgPtr<K>& algebra() const { return alg_; }
  Index dim() const { return dim_; }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  const Mat<K>& action_of_basis(Index k) const { return action_[k]; }

  RowVec<K> basis_row(Index i) const {
    RowVec<K> e = RowVec<K>::Zero(dim_);
    e(i) = K(1);
    return e;
  }

  Mat<K> action_of(const RowVec<K>& a) const {
    Mat<K> m = Mat<K>::Zero(dim_, dim_);
    for (Index k = 0; k < alg_->dim(); ++k)
      if (a(k) != K(0)) m += a(k) * action_[k];
    return m;
  }

  void validate() const {
    if (!alg_) throw ModuleError("module without algebra");
    if (static_cast<Index>(action_.size()) != alg_->dim())
      throw ModuleError("one action matrix per algebra basis element required");
    for (const auto& m : action_)
      if (m.rows() != dim_ || m.cols() != dim_)
        throw ModuleError("action matrices must be square of the module dimension");
    if (action_of(alg_->unit()) != Mat<K>::Identity(dim_, dim_))
      throw ModuleError("unit does not act as the identity");
    for (Index i = 0; i < alg_->dim(); ++i)
      for (Index j = 0; j < alg_->dim(); ++j)
        if (action_of(alg_->left_mult_of_basis(i).row(j)) != action_[j] * action_[i])
          throw ModuleError("action does not respect the multiplication table");
  }

  /// Subspace spanned by rad·x.
  Subspace<K> radical_subspace() const {
    const auto& rad = alg_->radical();
    Mat<K> rows(rad.dim() * dim_, dim_);
    for (Index r = 0; r < rad.dim(); ++r)
      rows.middleRows(r * dim_, dim_) = action_of(rad.basis().row(r));
    return image(rows);
  }

  /// Image of the idempotent action, i.e. the summand e·x.
  Subspace<K> idempotent_part(Index i) const {
    return image(action_of(alg_->prim_idempotents()[i]));
  }

private:
  AlgPtr<K> alg_;
  Index dim_ = 0;
  std::vector<Mat<K>> action_;
  std::string name_;
};

template <typename K>
struct ModuleMap {
  Module<K> source;
  Module<K> target;
  Mat<K> matrix;  // source coords to target coords, rows act from the right

  ModuleMap(Module<K> src, Module<K> tgt, Mat<K> m)
      : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
    validate();
  }

  void validate() const {
    require_same_algebra(source.algebra(), target.algebra(), "module map");
    if (matrix.rows() != source.dim() || matrix.cols() != target.dim())
      throw ModuleError("module map matrix has wrong shape");
    for (Index k = 0; k < source.algebra()->dim(); ++k)
      if (source.action_of_basis(k) * matrix != matrix * target.action_of_basis(k))
        throw ModuleError("module map does not intertwine the action");
  }

  Index rank_of() const { return moritakit::rank(matrix); }
  bool is_epi() const { return rank_of() == target.dim(); }
  bool is_mono() const { return rank_of() == source.dim(); }
  bool is_iso() const { return is_epi() && is_mono(); }
};

// --- submodules, quotients, sums -------------------------------------------

template <typename K>
bool is_invariant(const Module<K>& x, const Subspace<K>& s) {
  for (Index k = 0; k < x.algebra()->dim(); ++k)
    for (Index i = 0; i < s.dim(); ++i)
      if (!s.contains(RowVec<K>(s.basis().row(i) * x.action_of_basis(k)))) return false;
  return true;
}

template <typename K>
struct SubmoduleResult {
  Module<K> module;
  ModuleMap<K> inclusion;
};

template <typename K>
SubmoduleResult<K> submodule(const Module<K>& x, const Subspace<K>& s) {
  if (!is_invariant(x, s)) throw ModuleError("subspace is not a submodule");
  const Index d = s.dim();
  std::vector<Mat<K>> act(x.algebra()->dim());
  for (Index k = 0; k < x.algebra()->dim(); ++k) {
    act[k] = Mat<K>(d, d);
    for (Index i = 0; i < d; ++i)
      act[k].row(i) = s.coords_of(RowVec<K>(s.basis().row(i) * x.action_of_basis(k)));
  }
  Module<K> sub = Module<K>::unchecked(x.algebra(), std::move(act));
  ModuleMap<K> incl(sub, x, s.basis());
  return {std::move(sub), std::move(incl)};
}

template <typename K>
struct QuotientModuleResult {
  Module<K> module;
  ModuleMap<K> projection;
};

template <typename K>
QuotientModuleResult<K> quotient_module(const Module<K>& x, const Subspace<K>& s) {
  if (!is_invariant(x, s)) throw ModuleError("subspace is not a submodule");
  auto maps = quotient(x.dim(), s);
  std::vector<Mat<K>> act(x.algebra()->dim());
  for (Index k = 0; k < x.algebra()->dim(); ++k)
    act[k] = maps.section * x.action_of_basis(k) * maps.projection;
  Module<K> q = Module<K>::unchecked(x.algebra(), std::move(act));
  ModuleMap<K> proj(x, q, maps.projection);
  return {std::move(q), std::move(proj)};
}

template <typename K>
struct DirectSum {
  Module<K> module;
  std::vector<Index> offsets;  // start of each summand

  Mat<K> inclusion(Index i, Index summand_dim) const {
    Mat<K> m = Mat<K>::Zero(summand_dim, module.dim());
    m.middleCols(offsets[i], summand_dim) = Mat<K>::Identity(summand_dim, summand_dim);
    return m;
  }
};

template <typename K>
DirectSum<K> direct_sum(const AlgPtr<K>& alg, const std::vector<Module<K>>& parts) {
  Index total = 0;
  std::vector<Index> offsets;
  for (const auto& p : parts) {
    require_same_algebra(alg, p.algebra(), "direct sum");
    offsets.push_back(total);
    total += p.dim();
  }
  std::vector<Mat<K>> act(alg->dim(), Mat<K>::Zero(total, total));
  for (Index k = 0; k < alg->dim(); ++k)
    for (std::size_t i = 0; i < parts.size(); ++i)
      act[k].block(offsets[i], offsets[i], parts[i].dim(), parts[i].dim()) =
          parts[i].action_of_basis(k);
  return {Module<K>::unchecked(alg, std::move(act)), std::move(offsets)};
}

// --- distinguished modules --------------------------------------------------

template <typename K>
Module<K> regular_module(const AlgPtr<K>& a) {
  std::vector<Mat<K>> act(a->dim());
  for (Index k = 0; k < a->dim(); ++k) act[k] = a->left_mult_of_basis(k);
  return Module<K>::unchecked(a, std::move(act), a->name().empty() ? "regular" : a->name());
}

template <typename K>
SubmoduleResult<K> projective(const AlgPtr<K>& a, Index i) {
  if (i < 0 || i >= static_cast<Index>(a->prim_idempotents().size()))
    throw ModuleError("projective index out of range");
  Module<K> reg = regular_module(a);
  auto sub = submodule(reg, image(a->right_mult_matrix(a->prim_idempotents()[i])));
  sub.module.set_name("P" + std::to_string(i));
  return sub;
}

/// Dual module over the opposite algebra; a contravariant exact duality.
template <typename K>
Module<K> dual(const Module<K>& x) {
  auto op = opposite(x.algebra());
  std::vector<Mat<K>> act(op->dim());
  for (Index k = 0; k < op->dim(); ++k) act[k] = x.action_of_basis(k).transpose();
  Module<K> d = Module<K>::unchecked(op, std::move(act));
  d.set_name("D(" + x.name() + ")");
  return d;
}

/// Dual of a map: D(f): D(target) -> D(source) with the transposed matrix.
template <typename K>
ModuleMap<K> dual_map(const ModuleMap<K>& f) {
  return ModuleMap<K>(dual(f.target), dual(f.source), f.matrix.transpose());
}

template <typename K>
Module<K> injective(const AlgPtr<K>& a, Index i) {
  auto m = dual(projective(opposite(a), i).module);
  m.set_name("I" + std::to_string(i));
  return m;
}

template <typename K>
std::vector<Module<K>> simples(const AlgPtr<K>& a);

// --- hom spaces -------------------------------------------------------------

/// Intertwiners x -> y as a subspace of row-major vectorized matrices.
/// The defining conditions act(k)·F = F·act(k) are intersected one basis
/// element at a time to keep the working set small.
template <typename K>
Subspace<K> hom_space(const Module<K>& x, const Module<K>& y) {
  require_same_algebra(x.algebra(), y.algebra(), "hom");
  const Index dx = x.dim(), dy = y.dim(), n = x.algebra()->dim();
  const Mat<K> idx = Mat<K>::Identity(dx, dx);
  const Mat<K> idy = Mat<K>::Identity(dy, dy);
  Subspace<K> s = Subspace<K>::full(dx * dy);
  for (Index k = 0; k < n && s.dim() > 0; ++k) {
    Mat<K> cond = kron(Mat<K>(x.action_of_basis(k).transpose()), idy) -
                  kron(idx, y.action_of_basis(k));
    Subspace<K> w = kernel(Mat<K>(s.basis() * cond));
    s = Subspace<K>::from_span(Mat<K>(w.basis() * s.basis()));
  }
  return s;
}

template <typename K>
Mat<K> unvec(const RowVec<K>& v, Index rows, Index cols) {
  Mat<K> m(rows, cols);
  for (Index i = 0; i < rows; ++i) m.row(i) = v.segment(i * cols, cols);
  return m;
}

template <typename K>
RowVec<K> vec(const Mat<K>& m) {
  RowVec<K> v(m.rows() * m.cols());
  for (Index i = 0; i < m.rows(); ++i) v.segment(i * m.cols(), m.cols()) = m.row(i);
  return v;
}

template <typename K>
std::vector<Mat<K>> hom_basis(const Module<K>& x, const Module<K>& y) {
  auto s = hom_space(x, y);
  std::vector<Mat<K>> mats;
  for (Index i = 0; i < s.dim(); ++i)
    mats.push_back(unvec<K>(s.basis().row(i), x.dim(), y.dim()));
  return mats;
}

template <typename K>
Index hom_dim(const Module<K>& x, const Module<K>& y) {
  return hom_space(x, y).dim();
}

template <typename K>
std::vector<Module<K>> simples(const AlgPtr<K>& a) {
  std::vector<Module<K>> out;
  for (std::size_t i = 0; i < a->prim_idempotents().size(); ++i) {
    auto p = projective(a, static_cast<Index>(i));
    auto top = quotient_module(p.module, p.module.radical_subspace());
    top.module.set_name("S" + std::to_string(i));
    out.push_back(std::move(top.module));
  }
  return out;
}

// --- bimodules ---------------------------------------------------------------

template <typename K>
class Bimodule {
public:
  Bimodule() = default;

  Bimodule(AlgPtr<K> left_alg, AlgPtr<K> right_alg, std::vector<Mat<K>> left_action,
           std::vector<Mat<K>> right_action, std::string name = "")
      : left_(std::move(left_alg)),
        right_(std::move(right_alg)),
        la_(std::move(left_action)),
        ra_(std::move(right_action)),
        name_(std::move(name)) {
    dim_ = la_.empty() ? 0 : la_[0].rows();
    validate();
  }

  static Bimodule zero(AlgPtr<K> l, AlgPtr<K> r) {
    return Bimodule(l, r, std::vector<Mat<K>>(l->dim(), Mat<K>(0, 0)),
                    std::vector<Mat<K>>(r->dim(), Mat<K>(0, 0)), "0");
  }

  /// The algebra as a bimodule over itself.
  static Bimodule regular(const AlgPtr<K>& a) {
    std::vector<Mat<K>> la(a->dim()), ra(a->dim());
    for (Index k = 0; k < a->dim(); ++k) {
      la[k] = a->left_mult_of_basis(k);
      ra[k] = a->right_mult_matrix(a->basis_element(k));
    }
    return Bimodule(a, a, std::move(la), std::move(ra),
                    a->name().empty() ? "regular" : a->name());
  }

  const AlgPtr<K>& left_algebra() const { return left_; }
  const AlgPtr<K>& right_algebra() const { return right_; }
  Index dim() const { return dim_; }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  const Mat<K>& left_action_of_basis(Index k) const { return la_[k]; }
  const Mat<K>& right_action_of_basis(Index k) const { return ra_[k]; }

  RowVec<K> basis_row(Index i) const {
    RowVec<K> e = RowVec<K>::Zero(dim_);
    e(i) = K(1);
    return e;
  }

  Mat<K> left_action_of(const RowVec<K>& b) const {
    Mat<K> m = Mat<K>::Zero(dim_, dim_);
    for (Index k = 0; k < left_->dim(); ++k)
      if (b(k) != K(0)) m += b(k) * la_[k];
    return m;
  }

  Mat<K> right_action_of(const RowVec<K>& a) const {
    Mat<K> m = Mat<K>::Zero(dim_, dim_);
    for (Index k = 0; k < right_->dim(); ++k)
      if (a(k) != K(0)) m += a(k) * ra_[k];
    return m;
  }

  Module<K> as_left_module() const {
    Module<K> m(left_, la_);
    m.set_name(name_);
    return m;
  }

  /// The right structure as a left module over the opposite algebra.
  Module<K> right_as_left_module() const {
    Module<K> m(opposite(right_), ra_);
    m.set_name(name_ + "^r");
    return m;
  }

  void validate() const {
    as_left_module().validate();
    // Right module axiom: action(u·v) = action(u)·action(v).
    if (right_action_of(right_->unit()) != Mat<K>::Identity(dim_, dim_))
      throw ModuleError("right unit does not act as identity");
    for (Index i = 0; i < right_->dim(); ++i)
      for (Index j = 0; j < right_->dim(); ++j)
        if (right_action_of(right_->left_mult_of_basis(i).row(j)) != ra_[i] * ra_[j])
          throw ModuleError("right action does not respect multiplication");
    for (Index i = 0; i < left_->dim(); ++i)
      for (Index j = 0; j < right_->dim(); ++j)
        if (la_[i] * ra_[j] != ra_[j] * la_[i])
          throw ModuleError("left and right actions do not commute");
  }

private:
  AlgPtr<K> left_, right_;
  Index dim_ = 0;
  std::vector<Mat<K>> la_, ra_;
  std::string name_;
};

// --- tensor products ----------------------------------------------------------

template <typename K>
struct TensorSpace {
  Index left_dim = 0, right_dim = 0;
  Mat<K> proj;     // (left_dim*right_dim) x q
  Mat<K> section;  // q x (left_dim*right_dim)

  Index dim() const { return proj.cols(); }

  /// Induced matrix of a map acting on the plain tensor square.
  Mat<K> induce(const Mat<K>& plain, const TensorSpace& target) const {
    return section * plain * target.proj;
  }
};

/// Quotient of U (x) V by the balancing relations over the middle algebra:
/// rows of kron(Ru_k, I) - kron(I, Lv_k).
template <typename K>
TensorSpace<K> tensor_space(Index du, const std::vector<Mat<K>>& right_action_u,
                            Index dv, const std::vector<Mat<K>>& left_action_v) {
  const Index n = static_cast<Index>(right_action_u.size());
  const Mat<K> idu = Mat<K>::Identity(du, du);
  const Mat<K> idv = Mat<K>::Identity(dv, dv);
  Subspace<K> rel = Subspace<K>::zero(du * dv);
  for (Index k = 0; k < n && rel.dim() < du * dv; ++k) {
    Mat<K> rows = kron(right_action_u[k], idv) - kron(idu, left_action_v[k]);
    Mat<K> stacked(rel.dim() + rows.rows(), du * dv);
    stacked << rel.basis(), rows;
    rel = Subspace<K>::from_span(stacked);
  }
  TensorSpace<K> t;
  t.left_dim = du;
  t.right_dim = dv;
  auto maps = quotient(du * dv, rel);
  t.proj = std::move(maps.projection);
  t.section = std::move(maps.section);
  return t;
}

template <typename K>
struct TensorModule {
  Module<K> module;   // over the left algebra of the bimodule
  TensorSpace<K> sp;  // remembered quotient maps from the plain tensor square
};

/// M (x)_A X for a (B,A)-bimodule M and an A-module X.
template <typename K>
TensorModule<K> tensor(const Bimodule<K>& m, const Module<K>& x) {
  require_same_algebra(m.right_algebra(), x.algebra(), "tensor");
  std::vector<Mat<K>> left_on_x(x.algebra()->dim());
  for (Index k = 0; k < x.algebra()->dim(); ++k) left_on_x[k] = x.action_of_basis(k);
  std::vector<Mat<K>> right_on_m(m.right_algebra()->dim());
  for (Index k = 0; k < m.right_algebra()->dim(); ++k)
    right_on_m[k] = m.right_action_of_basis(k);
  TensorSpace<K> sp = tensor_space(m.dim(), right_on_m, x.dim(), left_on_x);
  const Index dx = x.dim();
  std::vector<Mat<K>> act(m.left_algebra()->dim());
  for (Index k = 0; k < m.left_algebra()->dim(); ++k)
    act[k] = sp.induce(kron(m.left_action_of_basis(k), Mat<K>(Mat<K>::Identity(dx, dx))), sp);
  Module<K> out(m.left_algebra(), std::move(act));
  out.set_name(m.name() + "(x)" + x.name());
  return {std::move(out), std::move(sp)};
}

template <typename K>
struct TensorBimodule {
  Bimodule<K> module;  // (A,C)-bimodule from (A,B) (x)_B (B,C)
  TensorSpace<K> sp;
};

template <typename K>
TensorBimodule<K> tensor_bimodules(const Bimodule<K>& m, const Bimodule<K>& n) {
  require_same_algebra(m.right_algebra(), n.left_algebra(), "tensor");
  std::vector<Mat<K>> right_on_m(m.right_algebra()->dim());
  for (Index k = 0; k < m.right_algebra()->dim(); ++k)
    right_on_m[k] = m.right_action_of_basis(k);
  std::vector<Mat<K>> left_on_n(n.left_algebra()->dim());
  for (Index k = 0; k < n.left_algebra()->dim(); ++k)
    left_on_n[k] = n.left_action_of_basis(k);
  TensorSpace<K> sp = tensor_space(m.dim(), right_on_m, n.dim(), left_on_n);
  std::vector<Mat<K>> la(m.left_algebra()->dim()), ra(n.right_algebra()->dim());
  for (Index k = 0; k < m.left_algebra()->dim(); ++k)
    la[k] = sp.induce(kron(m.left_action_of_basis(k), Mat<K>(Mat<K>::Identity(n.dim(), n.dim()))), sp);
  for (Index k = 0; k < n.right_algebra()->dim(); ++k)
    ra[k] = sp.induce(kron(Mat<K>(Mat<K>::Identity(m.dim(), m.dim())), n.right_action_of_basis(k)), sp);
  Bimodule<K> out(m.left_algebra(), n.right_algebra(), std::move(la), std::move(ra),
                  m.name() + "(x)" + n.name());
  return {std::move(out), std::move(sp)};
}

// --- hom modules ---------------------------------------------------------------

template <typename K>
struct HomModule {
  Module<K> module;             // over the right algebra of the bimodule
  std::vector<Mat<K>> basis;    // intertwiner matrices M -> Y
  Subspace<K> space;            // the vectorized hom subspace
};

/// Hom_B(M, Y) for a (B,A)-bimodule M and a B-module Y, as an A-module via
/// (a·h)(m) = h(m·a).
template <typename K>
HomModule<K> hom_module(const Bimodule<K>& m, const Module<K>& y) {
  require_same_algebra(m.left_algebra(), y.algebra(), "hom module");
  Module<K> ml = m.as_left_module();
  Subspace<K> hs = hom_space(ml, y);
  const Index t = hs.dim();
  const AlgPtr<K>& a = m.right_algebra();
  std::vector<Mat<K>> act(a->dim(), Mat<K>(t, t));
  std::vector<Mat<K>> mats;
  for (Index i = 0; i < t; ++i) mats.push_back(unvec<K>(hs.basis().row(i), m.dim(), y.dim()));
  for (Index k = 0; k < a->dim(); ++k)
    for (Index i = 0; i < t; ++i)
      act[k].row(i) = hs.coords_of(vec<K>(Mat<K>(m.right_action_of_basis(k) * mats[i])));
  Module<K> out(a, std::move(act));
  out.set_name("Hom(" + m.name() + "," + y.name() + ")");
  return {std::move(out), std::move(mats), std::move(hs)};
}

// --- trivial extension ----------------------------------------------------------

/// A ⋉ N for an (A,A)-bimodule N: pairs (a, n) with N squaring to zero.
template <typename K>
AlgPtr<K> trivial_extension(const AlgPtr<K>& a, const Bimodule<K>& n) {
  require_same_algebra(a, n.left_algebra(), "trivial extension");
  require_same_algebra(a, n.right_algebra(), "trivial extension");
  const Index da = a->dim(), dn = n.dim(), d = da + dn;
  typename Algebra<K>::Data data;
  data.name = (a->name().empty() ? "A" : a->name()) + "|x|" + n.name();
  for (const auto& l : a->basis_labels()) data.basis_labels.push_back(l);
  for (Index i = 0; i < dn; ++i) data.basis_labels.push_back("n" + std::to_string(i));
  data.left_mult.assign(d, Mat<K>::Zero(d, d));
  for (Index i = 0; i < da; ++i) {
    data.left_mult[i].topLeftCorner(da, da) = a->left_mult_of_basis(i);
    data.left_mult[i].bottomRightCorner(dn, dn) = n.left_action_of_basis(i);
  }
  for (Index i = 0; i < dn; ++i)
    for (Index j = 0; j < da; ++j)
      data.left_mult[da + i].row(j).tail(dn) = n.right_action_of_basis(j).row(i);
  data.unit = RowVec<K>::Zero(d);
  data.unit.head(da) = a->unit();
  for (const auto& e : a->prim_idempotents()) {
    RowVec<K> x = RowVec<K>::Zero(d);
    x.head(da) = e;
    data.prim_idempotents.push_back(x);
  }
  Mat<K> rad = Mat<K>::Zero(a->radical().dim() + dn, d);
  rad.topLeftCorner(a->radical().dim(), da) = a->radical().basis();
  rad.bottomRightCorner(dn, dn) = Mat<K>::Identity(dn, dn);
  data.radical = Subspace<K>::from_span(rad);
  return Algebra<K>::create(std::move(data));
}

// --- endomorphism algebras --------------------------------------------------------

template <typename K>
struct EndAlgebra {
  AlgPtr<K> alg;
  Module<K> carrier;           // the direct sum the endomorphisms act on
  std::vector<Index> offsets;  // summand offsets inside the carrier
  std::vector<Mat<K>> basis;   // endomorphism matrix per algebra basis element
  Subspace<K> space;           // vectorized End-subspace for coordinates

  RowVec<K> coords_of_endo(const Mat<K>& f) const { return space.coords_of(vec<K>(f)); }
};

/// End(u_1 ⊕ ... ⊕ u_r) with diagrammatic composition; the summands must be
/// indecomposable for the summand projections to be primitive idempotents.
template <typename K>
EndAlgebra<K> end_algebra(const AlgPtr<K>& l, const std::vector<Module<K>>& summands,
                          std::string name = "End") {
  if (summands.empty()) throw ModuleError("end algebra needs at least one summand");
  auto sum = direct_sum(l, summands);
  Subspace<K> hs = hom_space(sum.module, sum.module);
  const Index t = hs.dim();
  std::vector<Mat<K>> mats;
  for (Index i = 0; i < t; ++i)
    mats.push_back(unvec<K>(hs.basis().row(i), sum.module.dim(), sum.module.dim()));

  typename Algebra<K>::Data d;
  d.name = std::move(name);
  for (Index i = 0; i < t; ++i) d.basis_labels.push_back("f" + std::to_string(i));
  d.left_mult.assign(t, Mat<K>(t, t));
  for (Index i = 0; i < t; ++i)
    for (Index j = 0; j < t; ++j)
      d.left_mult[i].row(j) = hs.coords_of(vec<K>(Mat<K>(mats[i] * mats[j])));
  d.unit = hs.coords_of(vec<K>(Mat<K>(Mat<K>::Identity(sum.module.dim(), sum.module.dim()))));
  for (std::size_t s = 0; s < summands.size(); ++s) {
    Mat<K> pi = Mat<K>::Zero(sum.module.dim(), sum.module.dim());
    pi.block(sum.offsets[s], sum.offsets[s], summands[s].dim(), summands[s].dim()) =
        Mat<K>::Identity(summands[s].dim(), summands[s].dim());
    d.prim_idempotents.push_back(hs.coords_of(vec<K>(pi)));
  }
  // Radical via the trace form; create() verifies nilpotency and the quotient.
  {
    Algebra<K> probe = Algebra<K>::probe(d);
    d.radical = probe.trace_form_radical();
  }
  EndAlgebra<K> out;
  out.alg = Algebra<K>::create(std::move(d));
  out.carrier = sum.module;
  out.offsets = sum.offsets;
  out.basis = std::move(mats);
  out.space = std::move(hs);
  return out;
}

}  // namespace moritakit

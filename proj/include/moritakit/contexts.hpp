#pragma once

// Context constructors: Pierce decompositions, the delta context with all
// four entries one algebra, endomorphism contexts of a pair of module lists,
// and the trivial-extension description of a zero-map Morita ring.

#include "moritakit/morita.hpp"

namespace moritakit {

/// The Morita context of a Pierce decomposition along e, 1-e given by a
/// two-block partition of the primitive idempotents.
template <typename K>
MoritaContext<K> from_pierce(const AlgPtr<K>& a, const std::vector<int>& part1,
                             const std::vector<int>& part2, std::string name = "pierce") {
  const auto& idems = a->prim_idempotents();
  if (part1.empty() || part2.empty())
    throw MoritaError("pierce split needs two nonempty parts");
  std::vector<bool> seen(idems.size(), false);
  RowVec<K> e = RowVec<K>::Zero(a->dim()), f = RowVec<K>::Zero(a->dim());
  for (int i : part1) {
    if (i < 0 || i >= static_cast<int>(idems.size()) || seen[i])
      throw MoritaError("pierce split is not a partition");
    seen[i] = true;
    e += idems[i];
  }
  for (int i : part2) {
    if (i < 0 || i >= static_cast<int>(idems.size()) || seen[i])
      throw MoritaError("pierce split is not a partition");
    seen[i] = true;
    f += idems[i];
  }
  for (bool s : seen)
    if (!s) throw MoritaError("pierce split must cover all primitive idempotents");

  auto cornerA = pierce_corner_with_embedding(a, e);
  auto cornerB = pierce_corner_with_embedding(a, f);

  auto sandwich = [&](const RowVec<K>& l, const RowVec<K>& r) {
    return Mat<K>(a->left_mult_matrix(l) * a->right_mult_matrix(r));
  };
  Subspace<K> sm = image(sandwich(f, e));  // M = f·a·e
  Subspace<K> sn = image(sandwich(e, f));  // N = e·a·f

  auto bimodule_on = [&](const Subspace<K>& space, const CornerAlgebra<K>& left,
                         const CornerAlgebra<K>& right, const std::string& nm) {
    const Index d = space.dim();
    std::vector<Mat<K>> la(left.alg->dim()), ra(right.alg->dim());
    for (Index k = 0; k < left.alg->dim(); ++k) {
      la[k] = Mat<K>(d, d);
      for (Index v = 0; v < d; ++v)
        la[k].row(v) = space.coords_of(a->mul(left.embed.basis().row(k), space.basis().row(v)));
    }
    for (Index k = 0; k < right.alg->dim(); ++k) {
      ra[k] = Mat<K>(d, d);
      for (Index v = 0; v < d; ++v)
        ra[k].row(v) = space.coords_of(a->mul(space.basis().row(v), right.embed.basis().row(k)));
    }
    return Bimodule<K>(left.alg, right.alg, std::move(la), std::move(ra), nm);
  };
  Bimodule<K> M = bimodule_on(sm, cornerB, cornerA, "M");
  Bimodule<K> N = bimodule_on(sn, cornerA, cornerB, "N");

  // φ, ψ by multiplication in a, defined on the plain tensors and descended.
  auto pairing = [&](const Bimodule<K>& u, const Subspace<K>& su, const Bimodule<K>& v,
                     const Subspace<K>& sv, const CornerAlgebra<K>& target,
                     const TensorSpace<K>& sp) {
    Mat<K> plain(u.dim() * v.dim(), target.alg->dim());
    for (Index i = 0; i < u.dim(); ++i)
      for (Index j = 0; j < v.dim(); ++j)
        plain.row(i * v.dim() + j) =
            target.embed.coords_of(a->mul(su.basis().row(i), sv.basis().row(j)));
    Mat<K> out = sp.section * plain;
    if (sp.proj * out != plain) throw MoritaError("pierce pairing not balanced");
    return out;
  };
  TensorBimodule<K> mn = tensor_bimodules(M, N);
  TensorBimodule<K> nm = tensor_bimodules(N, M);
  Mat<K> phi = pairing(M, sm, N, sn, cornerB, mn.sp);
  Mat<K> psi = pairing(N, sn, M, sm, cornerA, nm.sp);

  auto c = MoritaContext<K>::make(cornerA.alg, cornerB.alg, M, N, std::move(phi),
                                  std::move(psi), std::move(name));
  auto report = validate_context(c);
  if (!report.valid())
    throw MoritaError("pierce context failed validation: " + report.violations.front().identity);
  return c;
}

/// The context with A = B = M = N = l; maps are multiplication, or zero on
/// request (the Λ(0,0) variant).
template <typename K>
MoritaContext<K> delta_context(const AlgPtr<K>& l, bool zero_maps = false,
                               std::string name = "delta") {
  Bimodule<K> reg = Bimodule<K>::regular(l);
  TensorBimodule<K> sq = tensor_bimodules(reg, reg);
  Mat<K> phi, psi;
  if (zero_maps) {
    phi = Mat<K>::Zero(sq.module.dim(), l->dim());
    psi = phi;
  } else {
    Mat<K> plain(l->dim() * l->dim(), l->dim());
    for (Index i = 0; i < l->dim(); ++i)
      for (Index j = 0; j < l->dim(); ++j)
        plain.row(i * l->dim() + j) = l->left_mult_of_basis(i).row(j);
    phi = sq.sp.section * plain;
    if (sq.sp.proj * phi != plain) throw MoritaError("delta pairing not balanced");
    psi = phi;
  }
  auto c = MoritaContext<K>::make(l, l, reg, reg, std::move(phi), std::move(psi),
                                  std::move(name));
  auto report = validate_context(c);
  if (!report.valid())
    throw MoritaError("delta context failed validation: " + report.violations.front().identity);
  return c;
}

/// End(U ⊕ V) as a Morita context: corners are the endomorphism algebras of
/// U = ⊕u_list and V = ⊕v_list, off-corners the Hom spaces, pairings by
/// composition. Summands must be indecomposable.
template <typename K>
MoritaContext<K> end_context(const AlgPtr<K>& l, const std::vector<Module<K>>& u_list,
                             const std::vector<Module<K>>& v_list,
                             std::string name = "end") {
  EndAlgebra<K> ea = end_algebra(l, u_list, "End(U)");
  EndAlgebra<K> eb = end_algebra(l, v_list, "End(V)");
  const Module<K>& u = ea.carrier;
  const Module<K>& v = eb.carrier;

  auto homs_uv = hom_space(u, v);  // the N slot: Hom(U,V), an (A,B)-bimodule
  auto homs_vu = hom_space(v, u);  // the M slot
  std::vector<Mat<K>> h_uv, h_vu;
  for (Index t = 0; t < homs_uv.dim(); ++t)
    h_uv.push_back(unvec<K>(homs_uv.basis().row(t), u.dim(), v.dim()));
  for (Index t = 0; t < homs_vu.dim(); ++t)
    h_vu.push_back(unvec<K>(homs_vu.basis().row(t), v.dim(), u.dim()));

  // Left/right actions by pre/post composition (diagrammatic order).
  auto action = [](const Subspace<K>& space, const std::vector<Mat<K>>& hom_mats,
                   const std::vector<Mat<K>>& alg_mats, bool pre) {
    std::vector<Mat<K>> act(alg_mats.size());
    for (std::size_t k = 0; k < alg_mats.size(); ++k) {
      act[k] = Mat<K>(static_cast<Index>(hom_mats.size()), static_cast<Index>(hom_mats.size()));
      for (std::size_t t = 0; t < hom_mats.size(); ++t) {
        Mat<K> res = pre ? Mat<K>(alg_mats[k] * hom_mats[t]) : Mat<K>(hom_mats[t] * alg_mats[k]);
        act[k].row(static_cast<Index>(t)) = space.coords_of(vec<K>(res));
      }
    }
    return act;
  };

  Bimodule<K> N(ea.alg, eb.alg, action(homs_uv, h_uv, ea.basis, true),
                action(homs_uv, h_uv, eb.basis, false), "Hom(U,V)");
  Bimodule<K> M(eb.alg, ea.alg, action(homs_vu, h_vu, eb.basis, true),
                action(homs_vu, h_vu, ea.basis, false), "Hom(V,U)");

  TensorBimodule<K> mn = tensor_bimodules(M, N);
  TensorBimodule<K> nm = tensor_bimodules(N, M);
  Mat<K> phi, psi;
  {
    Mat<K> plain(homs_vu.dim() * homs_uv.dim(), eb.alg->dim());
    for (Index i = 0; i < homs_vu.dim(); ++i)
      for (Index j = 0; j < homs_uv.dim(); ++j)
        plain.row(i * homs_uv.dim() + j) = eb.coords_of_endo(Mat<K>(h_vu[i] * h_uv[j]));
    phi = mn.sp.section * plain;
    if (mn.sp.proj * phi != plain) throw MoritaError("end context phi not balanced");
  }
  {
    Mat<K> plain(homs_uv.dim() * homs_vu.dim(), ea.alg->dim());
    for (Index i = 0; i < homs_uv.dim(); ++i)
      for (Index j = 0; j < homs_vu.dim(); ++j)
        plain.row(i * homs_vu.dim() + j) = ea.coords_of_endo(Mat<K>(h_uv[i] * h_vu[j]));
    psi = nm.sp.section * plain;
    if (nm.sp.proj * psi != plain) throw MoritaError("end context psi not balanced");
  }
  auto c = MoritaContext<K>::make(ea.alg, eb.alg, M, N, std::move(phi), std::move(psi),
                                  std::move(name));
  auto report = validate_context(c);
  if (!report.valid())
    throw MoritaError("end context failed validation: " + report.violations.front().identity);
  return c;
}

/// The explicit isomorphism Λ(0,0) ≅ (A x B) ⋉ (M ⊕ N) by rearrangement.
template <typename K>
AlgebraIso<K> trivial_extension_iso(const RingPtr<K>& ring) {
  const auto& c = ring->ctx;
  if (!c.zero_maps())
    throw MoritaError("trivial extension description needs phi = psi = 0");
  AlgPtr<K> prod = product_algebra(c.A, c.B);
  const Index dA = c.A->dim(), dB = c.B->dim(), dM = c.M.dim(), dN = c.N.dim();
  // The (A x B)-bimodule M ⊕ N: (a,b)·(m,n) = (bm, an), (m,n)·(a,b) = (ma, nb).
  std::vector<Mat<K>> la(prod->dim(), Mat<K>::Zero(dM + dN, dM + dN));
  std::vector<Mat<K>> ra(prod->dim(), Mat<K>::Zero(dM + dN, dM + dN));
  for (Index i = 0; i < dA; ++i) {
    la[i].bottomRightCorner(dN, dN) = c.N.left_action_of_basis(i);
    ra[i].topLeftCorner(dM, dM) = c.M.right_action_of_basis(i);
  }
  for (Index j = 0; j < dB; ++j) {
    la[dA + j].topLeftCorner(dM, dM) = c.M.left_action_of_basis(j);
    ra[dA + j].bottomRightCorner(dN, dN) = c.N.right_action_of_basis(j);
  }
  Bimodule<K> mn(prod, prod, std::move(la), std::move(ra), "M+N");
  AlgPtr<K> triv = trivial_extension(prod, mn);

  // Basis rearrangement (A | N | M | B) -> (A | B | M | N).
  Mat<K> perm = Mat<K>::Zero(ring->dim(), triv->dim());
  for (Index i = 0; i < dA; ++i) perm(ring->offA + i, i) = K(1);
  for (Index i = 0; i < dN; ++i) perm(ring->offN + i, dA + dB + dM + i) = K(1);
  for (Index i = 0; i < dM; ++i) perm(ring->offM + i, dA + dB + i) = K(1);
  for (Index i = 0; i < dB; ++i) perm(ring->offB + i, dA + i) = K(1);
  return AlgebraIso<K>(ring->lambda, triv, std::move(perm));
}

}  // namespace moritakit

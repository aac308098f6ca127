#pragma once

// Tight resolutions, the projective-dimension identities, and the global
// dimension bounds for zero-map Morita rings, plus the trivial-extension
// variants.

#include "moritakit/subcat.hpp"

namespace moritakit {

/// The flat Λ-module (X, 0, 0, 0) (or (0, Y, 0, 0)); only defined over
/// zero-map rings, where every corner module embeds.
template <typename K>
Module<K> embed_corner_module(const RingPtr<K>& ring, const Module<K>& x, Side side) {
  require_zero_maps(ring, "corner embedding");
  const auto& c = ring->ctx;
  require_same_algebra(x.algebra(), side == Side::A ? c.A : c.B, "corner embedding");
  std::vector<Mat<K>> act(ring->lambda->dim(), Mat<K>::Zero(x.dim(), x.dim()));
  const Index off = side == Side::A ? ring->offA : ring->offB;
  for (Index k = 0; k < x.algebra()->dim(); ++k) act[off + k] = x.action_of_basis(k);
  return Module<K>::unchecked(ring->lambda, std::move(act),
                              side == Side::A ? "Z_A(" + x.name() + ")"
                                              : "Z_B(" + x.name() + ")");
}

struct TightnessReport {
  Side side = Side::A;
  bool decided = false;
  bool tight = false;
  Index witness_degree = -1;  // first resolution degree with nonzero tensor
  Index checked_up_to = -1;
};

/// Prop 5.3 criterion: (X,0,0,0) has an A-tight projective Λ-resolution iff
/// M (x) P vanishes for every term P of a minimal A-resolution of X; for a
/// periodic resolution one full period decides all degrees.
template <typename K>
TightnessReport tightness(const RingPtr<K>& ring, const Module<K>& x, Side side,
                          Index cutoff) {
  require_zero_maps(ring, "tightness");
  const auto& c = ring->ctx;
  const Bimodule<K>& m = side == Side::A ? c.M : c.N;
  require_same_algebra(x.algebra(), side == Side::A ? c.A : c.B, "tightness");

  TightnessReport rep;
  rep.side = side;
  auto res = minimal_resolution(x, cutoff);
  Index limit = res.length();
  if (res.status == ResolutionStatus::periodic)
    limit = std::min<Index>(limit, res.periodic_start + res.period - 1);
  rep.checked_up_to = limit;
  for (Index i = 0; i <= limit; ++i) {
    if (tensor(m, res.terms[i]).module.dim() != 0) {
      rep.decided = true;
      rep.tight = false;
      rep.witness_degree = i;
      return rep;
    }
  }
  rep.decided = res.status != ResolutionStatus::truncated;
  rep.tight = rep.decided;
  return rep;
}

/// Direct inspection oracle: resolve (X,0,0,0) over Λ itself and test that
/// every term is a sum of A-side projectives (its e2-part vanishes).
template <typename K>
TightnessReport tightness_by_inspection(const RingPtr<K>& ring, const Module<K>& x,
                                        Side side, Index cutoff) {
  require_zero_maps(ring, "tightness by inspection");
  TightnessReport rep;
  rep.side = side;
  Module<K> flat = embed_corner_module(ring, x, side);
  auto res = minimal_resolution(flat, cutoff);
  Index limit = res.length();
  if (res.status == ResolutionStatus::periodic)
    limit = std::min<Index>(limit, res.periodic_start + res.period - 1);
  rep.checked_up_to = limit;
  const RowVec<K>& other = side == Side::A ? ring->e2 : ring->e1;
  for (Index i = 0; i <= limit; ++i) {
    if (image(res.terms[i].action_of(other)).dim() != 0) {
      rep.decided = true;
      rep.tight = false;
      rep.witness_degree = i;
      return rep;
    }
  }
  rep.decided = res.status != ResolutionStatus::truncated;
  rep.tight = rep.decided;
  return rep;
}

// --- pd identities (Lemmas 5.4-5.8) ---------------------------------------------

struct IdentityRow {
  std::string name;
  bool applicable = false;
  DimResult lhs, rhs;
  std::optional<bool> holds;  // nullopt when undecided
};

namespace homdimdetail {

inline std::optional<bool> check_leq(const DimResult& lhs, const DimResult& rhs) {
  return DimResult::leq(lhs, rhs);
}

inline std::optional<bool> check_eq(const DimResult& lhs, const DimResult& rhs) {
  if (lhs.is_infinite() && rhs.is_infinite()) return true;
  if (lhs.is_finite() && rhs.is_finite()) return lhs.value == rhs.value;
  if (lhs.is_infinite() && rhs.is_finite()) return false;
  if (lhs.is_finite() && rhs.is_infinite()) return false;
  return std::nullopt;
}

}  // namespace homdimdetail

template <typename K>
std::vector<IdentityRow> pd_identity_checks(const RingPtr<K>& ring, const Module<K>& x,
                                            Index cutoff) {
  require_zero_maps(ring, "pd identities");
  const auto& c = ring->ctx;
  require_same_algebra(x.algebra(), c.A, "pd identities");
  std::vector<IdentityRow> rows;
  auto pd_flat_a = [&](const Module<K>& v) { return pd(embed_corner_module(ring, v, Side::A), cutoff); };
  auto pd_flat_b = [&](const Module<K>& v) { return pd(embed_corner_module(ring, v, Side::B), cutoff); };

  // Lemma 5.4 at the projective cover of x: for projective P with M(x)P != 0,
  // pd(P,0,0,0) = 1 + pd(0, M(x)P, 0, 0).
  {
    auto cover = projective_cover(x);
    TensorModule<K> mp = tensor(c.M, cover.proj);
    IdentityRow row;
    row.name = "lemma 5.4 at the cover of " + x.name();
    row.applicable = mp.module.dim() != 0;
    if (row.applicable) {
      row.lhs = pd_flat_a(cover.proj);
      row.rhs = pd_flat_b(mp.module).plus(1);
      row.holds = homdimdetail::check_eq(row.lhs, row.rhs);
    } else {
      row.lhs = pd_flat_a(cover.proj);
      row.rhs = DimResult::finite(0);
      row.holds = homdimdetail::check_eq(row.lhs, DimResult::finite(0));
    }
    rows.push_back(row);
  }
  // Lemma 5.6: pd(X,0,0,0) <= 1 + max{pd(Ω X,0,0,0), pd(0,M,0,0)}.
  {
    IdentityRow row;
    row.name = "lemma 5.6 for " + x.name();
    row.applicable = true;
    row.lhs = pd_flat_a(x);
    auto cover = projective_cover(x);
    auto syz = submodule(cover.proj, kernel(cover.epi));
    row.rhs = DimResult::max(pd_flat_a(syz.module), pd_flat_b(c.M.as_left_module())).plus(1);
    row.holds = homdimdetail::check_leq(row.lhs, row.rhs);
    rows.push_back(row);
  }
  // Cor 5.7: pd(X,0,0,0) <= pd_A X + 1 + pd(0,M,0,0).
  {
    IdentityRow row;
    row.name = "cor 5.7 for " + x.name();
    row.applicable = true;
    row.lhs = pd_flat_a(x);
    DimResult pda = pd(x, cutoff);
    DimResult pdm = pd_flat_b(c.M.as_left_module());
    if (pda.is_infinite() || pdm.is_infinite())
      row.rhs = DimResult::infinite(0, 0);
    else if (!pda.decided() || !pdm.decided())
      row.rhs = DimResult::at_least(pda.value + pdm.value + 1);
    else
      row.rhs = DimResult::finite(pda.value + pdm.value + 1);
    row.holds = homdimdetail::check_leq(row.lhs, row.rhs);
    rows.push_back(row);
  }
  // Prop 5.8 (needs M to have a B-tight resolution): pd(X,0,0,0) <= pd_A X + 1 + pd_B M.
  {
    IdentityRow row;
    row.name = "prop 5.8 for " + x.name();
    auto tight_m = tightness(ring, c.M.as_left_module(), Side::B, cutoff);
    row.applicable = tight_m.decided && tight_m.tight;
    if (row.applicable) {
      row.lhs = pd_flat_a(x);
      DimResult pda = pd(x, cutoff);
      DimResult pdm = pd(c.M.as_left_module(), cutoff);
      if (pda.is_infinite() || pdm.is_infinite())
        row.rhs = DimResult::infinite(0, 0);
      else if (!pda.decided() || !pdm.decided())
        row.rhs = DimResult::at_least(pda.value + pdm.value + 1);
      else
        row.rhs = DimResult::finite(pda.value + pdm.value + 1);
      row.holds = homdimdetail::check_leq(row.lhs, row.rhs);
    }
    rows.push_back(row);
  }
  return rows;
}

// --- bound reports -----------------------------------------------------------------

struct Hypothesis {
  std::string name;
  std::optional<bool> verdict;
  std::string witness;
};

struct BoundReport {
  std::string theorem;
  std::vector<Hypothesis> hypotheses;
  DimResult lhs, rhs;
  std::string verdict;  // satisfied | violated | vacuous | undecided | hypotheses-fail

  bool hypotheses_hold() const {
    for (const auto& h : hypotheses)
      if (!h.verdict.has_value() || !*h.verdict) return false;
    return true;
  }

  void finish() {
    for (const auto& h : hypotheses) {
      if (!h.verdict.has_value()) {
        verdict = "undecided";
        return;
      }
      if (!*h.verdict) {
        verdict = "hypotheses-fail";
        return;
      }
    }
    if (rhs.is_infinite()) {
      verdict = "vacuous";
      return;
    }
    auto cmp = DimResult::leq(lhs, rhs);
    if (!cmp.has_value())
      verdict = "undecided";
    else
      verdict = *cmp ? "satisfied" : "violated";
  }
};

namespace homdimdetail {

inline DimResult sum_plus(const DimResult& a, const DimResult& b, long long c) {
  if (a.is_infinite()) return a;
  if (b.is_infinite()) return b;
  if (!a.decided() || !b.decided()) return DimResult::at_least(a.value + b.value + c);
  return DimResult::finite(a.value + b.value + c);
}

inline Hypothesis tightness_hypothesis(const std::string& name, const TightnessReport& t) {
  Hypothesis h;
  h.name = name;
  if (!t.decided && !(t.witness_degree >= 0))
    h.verdict = std::nullopt;
  else
    h.verdict = t.tight;
  if (t.witness_degree >= 0)
    h.witness = "tensor nonzero at resolution degree " + std::to_string(t.witness_degree);
  return h;
}

}  // namespace homdimdetail

/// Thm 5.9: tight M and N give gld Λ <= gld A + gld B + 1.
template <typename K>
BoundReport bound_thm_5_9(const RingPtr<K>& ring, Index cutoff) {
  require_zero_maps(ring, "theorem 5.9");
  const auto& c = ring->ctx;
  BoundReport rep;
  rep.theorem = "5.9";
  rep.hypotheses.push_back(homdimdetail::tightness_hypothesis(
      "M has a B-tight resolution", tightness(ring, c.M.as_left_module(), Side::B, cutoff)));
  rep.hypotheses.push_back(homdimdetail::tightness_hypothesis(
      "N has an A-tight resolution", tightness(ring, c.N.as_left_module(), Side::A, cutoff)));
  rep.lhs = gldim(ring->lambda, cutoff).value;
  rep.rhs = homdimdetail::sum_plus(gldim(c.A, cutoff).value, gldim(c.B, cutoff).value, 1);
  rep.finish();
  return rep;
}

/// Left-associated alternating tensor word of the given length; kind 'N'
/// starts with N (so N, NM, NMN, ...), kind 'M' starts with M.
template <typename K>
Bimodule<K> tensor_word(const MoritaContext<K>& c, char kind, Index length) {
  if (length < 1) throw MoritaError("tensor word needs positive length");
  Bimodule<K> acc = kind == 'N' ? c.N : c.M;
  char next = kind == 'N' ? 'M' : 'N';
  for (Index i = 1; i < length; ++i) {
    acc = tensor_bimodules(acc, next == 'N' ? c.N : c.M).module;
    next = next == 'N' ? 'M' : 'N';
  }
  return acc;
}

/// Is (W, 0, 0, 0) (side A) or (0, W, 0, 0) (side B) a tight projective
/// Λ-module: projective over the corner and killed by the crossing tensor.
template <typename K>
Hypothesis tight_projective_word(const RingPtr<K>& ring, const Bimodule<K>& w, Side side,
                                 const std::string& name) {
  const auto& c = ring->ctx;
  Hypothesis h;
  h.name = name;
  Module<K> left = w.as_left_module();
  bool proj = is_projective(left);
  bool killed = tensor(side == Side::A ? c.M : c.N, left).module.dim() == 0;
  h.verdict = proj && killed;
  if (!proj) h.witness = "not projective over the corner";
  else if (!killed) h.witness = "crossing tensor does not vanish";
  return h;
}

/// Thm 5.14 variants (1)-(6); s must respect the variant's stated range.
template <typename K>
BoundReport bound_thm_5_14(const RingPtr<K>& ring, int variant, Index s, Index cutoff) {
  require_zero_maps(ring, "theorem 5.14");
  const auto& c = ring->ctx;
  BoundReport rep;
  rep.theorem = "5.14(" + std::to_string(variant) + ") s=" + std::to_string(s);
  if (variant < 1 || variant > 6) throw MoritaError("theorem 5.14 variant out of range");
  const bool needs_positive_s = variant == 1 || variant == 4 || variant == 5;
  if (s < (needs_positive_s ? 1 : 0))
    throw MoritaError("s out of range for this variant");

  DimResult glda = gldim(c.A, cutoff).value;
  DimResult gldb = gldim(c.B, cutoff).value;
  {
    Hypothesis h;
    h.name = "gld A finite";
    h.verdict = glda.is_finite() ? std::optional<bool>(true)
                                 : (glda.is_infinite() ? std::optional<bool>(false) : std::nullopt);
    rep.hypotheses.push_back(h);
    h.name = "gld B finite";
    h.verdict = gldb.is_finite() ? std::optional<bool>(true)
                                 : (gldb.is_infinite() ? std::optional<bool>(false) : std::nullopt);
    rep.hypotheses.push_back(h);
  }
  {
    Hypothesis h;
    h.name = "M projective as left B-module";
    h.verdict = is_projective(c.M.as_left_module());
    rep.hypotheses.push_back(h);
    h.name = "N projective as left A-module";
    h.verdict = is_projective(c.N.as_left_module());
    rep.hypotheses.push_back(h);
  }

  // Alternating words: (NM)^s has length 2s starting with N; M(NM)^s length
  // 2s+1 starting with M; N(MN)^s length 2s+1 starting with N; (MN)^s length
  // 2s starting with M.
  auto word_nm = [&](Index pow) { return tensor_word(c, 'N', 2 * pow); };
  auto word_mn = [&](Index pow) { return tensor_word(c, 'M', 2 * pow); };
  auto word_m_nm = [&](Index pow) { return tensor_word(c, 'M', 2 * pow + 1); };
  auto word_n_mn = [&](Index pow) { return tensor_word(c, 'N', 2 * pow + 1); };

  long long a = glda.value, b = gldb.value;
  switch (variant) {
    case 1:
      rep.hypotheses.push_back(
          tight_projective_word(ring, word_nm(s), Side::A, "(NM)^s A-tight projective"));
      rep.rhs = DimResult::finite(std::max(a + 2 * s, b + 2 * s + 1));
      break;
    case 2:
      rep.hypotheses.push_back(tight_projective_word(ring, word_m_nm(s), Side::B,
                                                     "M(NM)^s B-tight projective"));
      rep.rhs = DimResult::finite(std::max(a + 2 * s + 1, b + 2 * (s + 1)));
      break;
    case 3:
      rep.hypotheses.push_back(tight_projective_word(ring, word_n_mn(s), Side::A,
                                                     "N(MN)^s A-tight projective"));
      rep.rhs = DimResult::finite(std::max(a + 2 * (s + 1), b + 2 * s + 1));
      break;
    case 4:
      rep.hypotheses.push_back(
          tight_projective_word(ring, word_mn(s), Side::B, "(MN)^s B-tight projective"));
      rep.rhs = DimResult::finite(std::max(a + 2 * s + 1, b + 2 * s));
      break;
    case 5:
      rep.hypotheses.push_back(
          tight_projective_word(ring, word_nm(s), Side::A, "(NM)^s A-tight projective"));
      rep.hypotheses.push_back(
          tight_projective_word(ring, word_mn(s), Side::B, "(MN)^s B-tight projective"));
      rep.rhs = DimResult::finite(std::max(a + 2 * s, b + 2 * s));
      break;
    case 6:
      rep.hypotheses.push_back(tight_projective_word(ring, word_n_mn(s), Side::A,
                                                     "N(MN)^s A-tight projective"));
      rep.hypotheses.push_back(tight_projective_word(ring, word_m_nm(s), Side::B,
                                                     "M(NM)^s B-tight projective"));
      rep.rhs = DimResult::finite(std::max(a + 2 * s + 1, b + 2 * s + 1));
      break;
  }
  if (!glda.is_finite() || !gldb.is_finite()) rep.rhs = DimResult::at_least(0);
  rep.lhs = gldim(ring->lambda, cutoff).value;
  rep.finish();
  return rep;
}

/// Prop 5.17: with M flat as a right A-module and N flat as a right
/// B-module, gld Λ >= max{gld A, gld B}.
template <typename K>
BoundReport lower_bound_5_17(const RingPtr<K>& ring, Index cutoff) {
  const auto& c = ring->ctx;
  BoundReport rep;
  rep.theorem = "5.17";
  {
    Hypothesis h;
    h.name = "M projective as right A-module";
    h.verdict = is_projective(c.M.right_as_left_module());
    rep.hypotheses.push_back(h);
    h.name = "N projective as right B-module";
    h.verdict = is_projective(c.N.right_as_left_module());
    rep.hypotheses.push_back(h);
  }
  rep.lhs = DimResult::max(gldim(c.A, cutoff).value, gldim(c.B, cutoff).value);
  rep.rhs = gldim(ring->lambda, cutoff).value;  // inequality reads lhs <= rhs
  for (const auto& h : rep.hypotheses)
    if (!h.verdict.has_value() || !*h.verdict) {
      rep.verdict = "hypotheses-fail";
      return rep;
    }
  auto cmp = DimResult::leq(rep.lhs, rep.rhs);
  rep.verdict = !cmp.has_value() ? "undecided" : (*cmp ? "satisfied" : "violated");
  return rep;
}

struct BelReport {
  std::optional<Index> nilpotency;  // c(H), nullopt when > cutoff
  BoundReport bel;                  // gld <= c(H) + 2 max
  BoundReport thm59;                // for comparison
};

/// §5.3 comparison: the nilpotency bound c(H) + 2·max{gld A, gld B} next to
/// the Thm 5.9 bound, under the tightness surrogate hypotheses.
template <typename K>
BelReport nilpotency_and_bel_bound(const RingPtr<K>& ring, Index cutoff) {
  require_zero_maps(ring, "bel bound");
  const auto& c = ring->ctx;
  BelReport rep;
  for (Index len = 1; len <= cutoff; ++len) {
    if (tensor_word(c, 'N', len).dim() == 0 && tensor_word(c, 'M', len).dim() == 0) {
      rep.nilpotency = len - 1;
      break;
    }
  }
  rep.bel.theorem = "5.3(*)";
  rep.bel.hypotheses.push_back(homdimdetail::tightness_hypothesis(
      "M has a B-tight resolution", tightness(ring, c.M.as_left_module(), Side::B, cutoff)));
  rep.bel.hypotheses.push_back(homdimdetail::tightness_hypothesis(
      "N has an A-tight resolution", tightness(ring, c.N.as_left_module(), Side::A, cutoff)));
  rep.bel.lhs = gldim(ring->lambda, cutoff).value;
  DimResult mx = DimResult::max(gldim(c.A, cutoff).value, gldim(c.B, cutoff).value);
  if (!rep.nilpotency.has_value() || mx.is_infinite() || !mx.decided())
    rep.bel.rhs = mx.is_infinite() ? DimResult::infinite(0, 0) : DimResult::at_least(0);
  else
    rep.bel.rhs = DimResult::finite(*rep.nilpotency + 2 * mx.value);
  rep.bel.finish();
  rep.thm59 = bound_thm_5_9(ring, cutoff);
  return rep;
}

// --- trivial extensions -------------------------------------------------------------

/// The Λ = A ⋉ N module Z(X): X with N acting as zero.
template <typename K>
Module<K> trivext_z(const AlgPtr<K>& lambda, const AlgPtr<K>& a, const Module<K>& x) {
  require_same_algebra(a, x.algebra(), "trivial extension Z");
  std::vector<Mat<K>> act(lambda->dim(), Mat<K>::Zero(x.dim(), x.dim()));
  for (Index k = 0; k < a->dim(); ++k) act[k] = x.action_of_basis(k);
  return Module<K>::unchecked(lambda, std::move(act), "Z(" + x.name() + ")");
}

template <typename K>
struct TrivextReport {
  AlgPtr<K> lambda;
  DimResult gld_lambda, gld_a, pd_zn, pd_an;
  BoundReport prop_5_19;
  BoundReport cor_5_20;
  std::vector<IdentityRow> lemma_5_18;  // one row per simple of A
};

template <typename K>
TrivextReport<K> trivext_bounds(const AlgPtr<K>& a, const Bimodule<K>& n, Index cutoff) {
  TrivextReport<K> rep;
  rep.lambda = trivial_extension(a, n);
  Module<K> nmod = n.as_left_module();
  rep.gld_lambda = gldim(rep.lambda, cutoff).value;
  rep.gld_a = gldim(a, cutoff).value;
  rep.pd_zn = n.dim() == 0 ? DimResult::finite(0) : pd(trivext_z(rep.lambda, a, nmod), cutoff);
  rep.pd_an = n.dim() == 0 ? DimResult::finite(0) : pd(nmod, cutoff);

  rep.prop_5_19.theorem = "5.19";
  rep.prop_5_19.lhs = rep.gld_lambda;
  rep.prop_5_19.rhs = homdimdetail::sum_plus(rep.gld_a, rep.pd_zn, 1);
  rep.prop_5_19.finish();

  rep.cor_5_20.theorem = "5.20";
  {
    Hypothesis h;
    h.name = "pd_A N = pd_Lambda Z(N)";
    h.verdict = homdimdetail::check_eq(rep.pd_an, rep.pd_zn);
    rep.cor_5_20.hypotheses.push_back(h);
  }
  rep.cor_5_20.lhs = rep.gld_lambda;
  rep.cor_5_20.rhs = rep.gld_a.is_infinite()
                         ? DimResult::infinite(0, 0)
                         : (rep.gld_a.decided() ? DimResult::finite(2 * rep.gld_a.value + 1)
                                                : DimResult::at_least(2 * rep.gld_a.value + 1));
  rep.cor_5_20.finish();

  for (const auto& s : simples(a)) {
    IdentityRow row;
    row.name = "lemma 5.18 for " + s.name();
    row.applicable = true;
    row.lhs = pd(trivext_z(rep.lambda, a, s), cutoff);
    auto cover = projective_cover(s);
    auto syz = submodule(cover.proj, kernel(cover.epi));
    DimResult zo = pd(trivext_z(rep.lambda, a, syz.module), cutoff);
    row.rhs = DimResult::max(zo, rep.pd_zn).plus(1);
    row.holds = homdimdetail::check_leq(row.lhs, row.rhs);
    rep.lemma_5_18.push_back(row);
  }
  return rep;
}

}  // namespace moritakit

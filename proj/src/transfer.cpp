#include "specalc/transfer.hpp"

namespace specalc {

std::string_view to_string(Scenario s) {
  switch (s) {
    case Scenario::nilpotent_factor: return "nilpotent_factor";
    case Scenario::both_algebraic: return "both_algebraic";
    case Scenario::a_algebraic_not_nilpotent: return "A_algebraic_not_nilpotent";
    case Scenario::b_algebraic_not_nilpotent: return "B_algebraic_not_nilpotent";
    case Scenario::both_non_algebraic: return "both_non_algebraic";
  }
  return "?";
}

std::string_view to_string(BweylDelta d) {
  switch (d) {
    case BweylDelta::equal: return "equal";
    case BweylDelta::equal_plus_zero: return "equal_plus_zero";
    case BweylDelta::other: return "other";
  }
  return "?";
}

Scenario classify_scenario(const OperatorFlags& a, const OperatorFlags& b) {
  if (a.nilpotent || b.nilpotent) return Scenario::nilpotent_factor;
  if (a.algebraic && b.algebraic) return Scenario::both_algebraic;
  if (a.algebraic) return Scenario::a_algebraic_not_nilpotent;
  if (b.algebraic) return Scenario::b_algebraic_not_nilpotent;
  return Scenario::both_non_algebraic;
}

PointSet s_set(const SpectralProfile& a, const SpectralProfile& b) {
  const DerivedSets da = derive_sets(a);
  const DerivedSets db = derive_sets(b);
  return PointSet::set_union(PointSet::product(da.spectrum, db.bweyl), PointSet::product(da.bweyl, db.spectrum))
      .simplified();
}

PointSet weyl_product_set(const SpectralProfile& a, const SpectralProfile& b) {
  const DerivedSets da = derive_sets(a);
  const DerivedSets db = derive_sets(b);
  return PointSet::set_union(PointSet::product(da.weyl, db.spectrum), PointSet::product(da.spectrum, db.weyl))
      .simplified();
}

InclusionVerdict bweyl_inclusion_holds(const SpectralProfile& a, const SpectralProfile& b, ProductMode mode,
                                       std::size_t depth) {
  const PointSet s = s_set(a, b);
  const PointSet bw = derive_sets(product_profile(a, b, mode, depth)).bweyl;
  InclusionVerdict v;
  v.witnesses = s.missing_from(bw, depth);
  v.holds = v.witnesses.empty();
  return v;
}

bool lemma41_check(const SpectralProfile& a, const SpectralProfile& b, ProductMode mode, std::size_t depth) {
  const PointSet bw = derive_sets(product_profile(a, b, mode, depth)).bweyl;
  return bw.subset_of(s_set(a, b), depth);
}

namespace {

bool zero_is_pole(const OperatorFlags& f) { return f.zero_class == ZeroClass::pole; }

TheoremPrediction predict(const TransferReport& r) {
  TheoremPrediction p;
  switch (r.scenario) {
    case Scenario::a_algebraic_not_nilpotent:
    case Scenario::b_algebraic_not_nilpotent: {
      const bool a_alg = r.scenario == Scenario::a_algebraic_not_nilpotent;
      const OperatorFlags& algebraic = a_alg ? r.flags_a : r.flags_b;
      const OperatorFlags& partner = a_alg ? r.flags_b : r.flags_a;
      p.rule = "algebraic_partner";
      p.predicted = !partner.drazin_invertible;
      p.applicable = zero_is_pole(algebraic);
      break;
    }
    case Scenario::both_non_algebraic:
      p.rule = "non_algebraic_pair";
      p.predicted = !zero_is_pole(r.flags_product);
      p.applicable = true;
      break;
    default:
      return p;
  }
  p.agrees = *p.predicted == r.inclusion_holds;
  return p;
}

}  // namespace

TransferReport transfer_report(const SpectralProfile& a, const SpectralProfile& b, ProductMode mode,
                               std::size_t depth) {
  TransferReport r;
  r.mode = mode;
  r.flags_a = derive_flags(a);
  r.flags_b = derive_flags(b);
  r.scenario = classify_scenario(r.flags_a, r.flags_b);
  r.product = product_profile_detailed(a, b, mode, depth);
  r.flags_product = derive_flags(r.product.profile);
  const DerivedSets dp = derive_sets(r.product.profile);

  r.s_set = s_set(a, b);
  r.sigma_bw_product = dp.bweyl.simplified();
  r.witnesses = r.s_set.missing_from(r.sigma_bw_product, depth);
  r.inclusion_holds = r.witnesses.empty();
  r.reverse_inclusion_holds = r.sigma_bw_product.subset_of(r.s_set, depth);
  r.bweyl_equals_s = r.inclusion_holds && r.reverse_inclusion_holds;

  if (r.bweyl_equals_s) {
    r.bweyl_delta = BweylDelta::equal;
  } else if (!r.sigma_bw_product.contains(GaussianRational(0))) {
    PointSet with_zero = r.sigma_bw_product;
    with_zero.insert(GaussianRational(0));
    if (r.s_set.same_as(with_zero, depth)) r.bweyl_delta = BweylDelta::equal_plus_zero;
  }

  r.prediction = predict(r);

  const bool alg_a = r.flags_a.algebraic && !r.flags_a.nilpotent;
  const bool alg_b = r.flags_b.algebraic && !r.flags_b.nilpotent;
  r.weyl_hypotheses =
      (r.scenario == Scenario::both_non_algebraic && !zero_is_pole(r.flags_product)) ||
      (r.scenario == Scenario::a_algebraic_not_nilpotent && alg_a && !r.flags_b.drazin_invertible) ||
      (r.scenario == Scenario::b_algebraic_not_nilpotent && alg_b && !r.flags_a.drazin_invertible);

  r.sigma_w_product = dp.weyl.simplified();
  r.weyl_product = weyl_product_set(a, b);
  r.weyl_identity_holds = r.sigma_w_product.same_as(r.weyl_product, depth);
  return r;
}

}  // namespace specalc

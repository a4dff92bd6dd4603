#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "specalc/point_set.hpp"
#include "specalc/product.hpp"
#include "specalc/profile.hpp"

namespace specalc {

enum class Scenario {
  nilpotent_factor,
  both_algebraic,
  a_algebraic_not_nilpotent,
  b_algebraic_not_nilpotent,
  both_non_algebraic,
};
std::string_view to_string(Scenario s);

Scenario classify_scenario(const OperatorFlags& a, const OperatorFlags& b);

/// σ(A)σ_BW(B) ∪ σ_BW(A)σ(B), families kept parameterized.
PointSet s_set(const SpectralProfile& a, const SpectralProfile& b);

/// σ_w(A)σ(B) ∪ σ(A)σ_w(B).
PointSet weyl_product_set(const SpectralProfile& a, const SpectralProfile& b);

struct InclusionVerdict {
  bool holds = false;
  PointSet witnesses;  // points of 𝕊 outside σ_BW of the product
};

InclusionVerdict bweyl_inclusion_holds(const SpectralProfile& a, const SpectralProfile& b, ProductMode mode,
                                       std::size_t depth = kDefaultCollisionDepth);

/// σ_BW(product) ⊆ 𝕊.
bool lemma41_check(const SpectralProfile& a, const SpectralProfile& b, ProductMode mode,
                   std::size_t depth = kDefaultCollisionDepth);

enum class BweylDelta { equal, equal_plus_zero, other };
std::string_view to_string(BweylDelta d);

/// What the characterization theorems predict for the inclusion.
/// rule is "algebraic_partner" (one algebraic non-nilpotent factor:
/// inclusion iff the other factor is not Drazin invertible),
/// "non_algebraic_pair" (inclusion iff 0 is not a pole of the product) or
/// "none". `applicable` is false outside the hypotheses; for
/// algebraic_partner it also requires 0 to be a pole of the algebraic
/// factor.
struct TheoremPrediction {
  std::string_view rule = "none";
  std::optional<bool> predicted;
  bool applicable = false;
  std::optional<bool> agrees;
};

struct TransferReport {
  ProductMode mode = ProductMode::tensor;
  Scenario scenario = Scenario::both_non_algebraic;
  OperatorFlags flags_a;
  OperatorFlags flags_b;
  OperatorFlags flags_product;
  ProductResult product;
  PointSet s_set;
  PointSet sigma_bw_product;
  bool inclusion_holds = false;
  PointSet witnesses;
  bool reverse_inclusion_holds = false;
  TheoremPrediction prediction;
  BweylDelta bweyl_delta = BweylDelta::other;
  /// Hypotheses under which the Browder-type identities are claimed: both
  /// factors non-algebraic with 0 not a pole of the product, or one factor
  /// algebraic non-nilpotent and the other not Drazin invertible.
  bool weyl_hypotheses = false;
  bool bweyl_equals_s = false;
  PointSet sigma_w_product;
  PointSet weyl_product;
  bool weyl_identity_holds = false;
};

TransferReport transfer_report(const SpectralProfile& a, const SpectralProfile& b, ProductMode mode,
                               std::size_t depth = kDefaultCollisionDepth);

}  // namespace specalc

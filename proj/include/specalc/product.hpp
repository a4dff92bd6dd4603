#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "specalc/profile.hpp"

namespace specalc {

/// A⊗B on the completed tensor product, or the elementary operator U ↦ AUB.
/// Both modes share one spectral calculus; the mode is carried through so
/// that callers can check that it never matters.
enum class ProductMode { tensor, elementary };

std::string_view to_string(ProductMode m);

/// One factor of a product point, read off a spectral profile.
struct FactorPoint {
  enum class Role { isolated, limit, sequence };
  GaussianRational value;
  Role role = Role::isolated;
  PointClass cls = PointClass::pole;
  Rank rank = Rank::infinite;
};

/// Every way of writing lambda = μν with μ described by A and ν by B.
/// Cluster sequence points are found with geom_member.
struct Factorization {
  GaussianRational lambda;
  std::vector<std::pair<FactorPoint, FactorPoint>> pairs;
};

Factorization factorize(const SpectralProfile& a, const SpectralProfile& b, const GaussianRational& lambda);

struct ZeroVerdict {
  ZeroClass cls = ZeroClass::absent;
  std::string_view rule;
};

/// Where 0 sits in σ(A⊗B) = σ(τ_AB).
ZeroVerdict classify_zero_detailed(const SpectralProfile& a, const SpectralProfile& b);
inline ZeroClass classify_zero(const SpectralProfile& a, const SpectralProfile& b) {
  return classify_zero_detailed(a, b).cls;
}

struct NonzeroVerdict {
  SpectralClass cls = SpectralClass::pole;
  Rank rank = Rank::infinite;
  std::string_view rule;
};

/// Class of a nonzero product point from its factorization: accumulation if
/// any factor is a cluster limit, else iso-non-pole if any factor is one,
/// else pole. Throws empty_factorization when there are no pairs.
NonzeroVerdict classify_nonzero(const Factorization& f);

struct ProvenanceEntry {
  GaussianRational point;
  bool cluster = false;
  SpectralClass cls = SpectralClass::pole;
  std::string rule;
};

struct ProductResult {
  SpectralProfile profile;
  std::vector<ProvenanceEntry> provenance;
};

/// Spectral profile of the product operator computed from the factor
/// profiles. Throws not_finitely_representable when both factors contain
/// clusters and collision_depth_exceeded when a collision cannot be
/// settled.
ProductResult product_profile_detailed(const SpectralProfile& a, const SpectralProfile& b, ProductMode mode,
                                       std::size_t depth = kDefaultCollisionDepth);

inline SpectralProfile product_profile(const SpectralProfile& a, const SpectralProfile& b, ProductMode mode,
                                       std::size_t depth = kDefaultCollisionDepth) {
  return product_profile_detailed(a, b, mode, depth).profile;
}

}  // namespace specalc

#pragma once

#include <string>
#include <variant>
#include <vector>

#include "specalc/product.hpp"
#include "specalc/profile.hpp"

namespace specalc {

/// λ + N with N nilpotent of the given order, on a space of the given rank.
struct JordanPole {
  GaussianRational lambda;
  unsigned order = 1;
  Rank rank = Rank::infinite;
  friend bool operator==(const JordanPole&, const JordanPole&) = default;
};

/// λ + Q with Q quasi-nilpotent but not nilpotent (necessarily infinite
/// dimensional).
struct QuasiNil {
  GaussianRational lambda;
  friend bool operator==(const QuasiNil&, const QuasiNil&) = default;
};

/// Diagonal operator with eigenvalues limit + scale·ratioⁿ, each of
/// multiplicity `rank_each`.
struct ClusterDiag {
  GaussianRational limit;
  GaussianRational scale;
  GaussianRational ratio;
  Rank rank_each = Rank::finite;
  friend bool operator==(const ClusterDiag&, const ClusterDiag&) = default;
};

using PrimitiveBlock = std::variant<JordanPole, QuasiNil, ClusterDiag>;

/// Formal direct sum of primitive blocks.
struct BlockModel {
  std::vector<PrimitiveBlock> blocks;

  bool has_clusters() const;
  friend bool operator==(const BlockModel&, const BlockModel&) = default;
};

/// Profile of the direct sum. Blocks at the same point merge by dominance;
/// the result must pass strict validation (throws invalid_profile).
SpectralProfile model_profile(const BlockModel& m, std::size_t depth = kDefaultCollisionDepth);

/// Spectrum of p ⊗ s (equivalently τ for the pair) from the rules table
/// alone. Throws not_finitely_representable for two cluster blocks.
std::vector<SpectralAtom> primitive_product(const PrimitiveBlock& p, const PrimitiveBlock& s);

/// Distributes the product over both direct sums and merges the pieces.
SpectralProfile oracle_product(const BlockModel& a, const BlockModel& b, std::size_t depth = kDefaultCollisionDepth);

struct AgreementReport {
  bool equal = false;
  SpectralProfile oracle;
  SpectralProfile calculus;
  std::vector<std::string> diffs;
};

/// Compares oracle_product with product_profile on the models' profiles.
AgreementReport oracle_agreement(const BlockModel& a, const BlockModel& b, ProductMode mode,
                                 std::size_t depth = kDefaultCollisionDepth);

}  // namespace specalc

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "specalc/gaussian_rational.hpp"
#include "specalc/point_set.hpp"

namespace specalc {

enum class PointClass { pole, iso_nonpole };
enum class Rank { finite, infinite };
/// Classification of a point of a computed spectrum. Ordered by dominance:
/// acc > iso_nonpole > pole.
enum class SpectralClass { pole, iso_nonpole, acc };
enum class ZeroClass { absent, pole, iso_nonpole, acc };

std::string_view to_string(PointClass c);
std::string_view to_string(Rank r);
std::string_view to_string(SpectralClass c);
std::string_view to_string(ZeroClass c);

inline PointClass dominant(PointClass a, PointClass b) {
  return (a == PointClass::iso_nonpole || b == PointClass::iso_nonpole) ? PointClass::iso_nonpole
                                                                         : PointClass::pole;
}
inline Rank absorb(Rank a, Rank b) {
  return (a == Rank::infinite || b == Rank::infinite) ? Rank::infinite : Rank::finite;
}

/// An isolated spectral point: a pole (finite ascent and descent) or an
/// isolated point that is not a pole. `rank` says whether the spectral
/// subspace at the point is finite dimensional; iso-non-poles are always
/// infinite. `order` is optional metadata for poles only.
struct IsolatedAtom {
  GaussianRational point;
  PointClass cls = PointClass::pole;
  Rank rank = Rank::infinite;
  std::optional<unsigned> order;

  friend bool operator==(const IsolatedAtom&, const IsolatedAtom&) = default;
};

/// Spectral points limit + scale·ratioⁿ (n >= 1), each classified as
/// `seq_class` with rank `seq_rank`, accumulating at `limit`.
struct ClusterAtom {
  GaussianRational limit;
  GaussianRational scale;
  GaussianRational ratio;
  PointClass seq_class = PointClass::pole;
  Rank seq_rank = Rank::finite;

  GeometricFamily family() const { return {limit, scale, ratio}; }

  friend bool operator==(const ClusterAtom&, const ClusterAtom&) = default;
};

using SpectralAtom = std::variant<IsolatedAtom, ClusterAtom>;

/// Merges two descriptions of the same isolated point: class dominance,
/// infinite rank absorbing, largest pole order kept.
IsolatedAtom merge_isolated(IsolatedAtom a, const IsolatedAtom& b);

/// Finite description of the spectrum of an operator on an
/// infinite-dimensional space. Atoms are kept sorted (isolated by point,
/// clusters by limit/scale/ratio), so equal profiles compare equal.
class SpectralProfile {
 public:
  SpectralProfile() = default;
  SpectralProfile(std::vector<IsolatedAtom> isolated, std::vector<ClusterAtom> clusters);

  const std::vector<IsolatedAtom>& isolated() const noexcept { return isolated_; }
  const std::vector<ClusterAtom>& clusters() const noexcept { return clusters_; }
  bool empty() const noexcept { return isolated_.empty() && clusters_.empty(); }
  bool has_clusters() const noexcept { return !clusters_.empty(); }

  const IsolatedAtom* find_isolated(const GaussianRational& p) const;

  friend bool operator==(const SpectralProfile&, const SpectralProfile&) = default;

 private:
  std::vector<IsolatedAtom> isolated_;
  std::vector<ClusterAtom> clusters_;
};

struct ValidationOptions {
  std::size_t collision_depth = kDefaultCollisionDepth;
  // Computed product spectra may carry several clusters accumulating at
  // the same limit (for instance every ν·cluster when the limit is 0).
  bool allow_shared_limits = false;
};

/// Every violated invariant, as a human-readable line. Empty means valid.
std::vector<std::string> validate_profile(const SpectralProfile& p, const ValidationOptions& opts = {});

/// Throws Error(invalid_profile) listing the violations.
void require_valid(const SpectralProfile& p, const ValidationOptions& opts = {});

/// Canonical merge of possibly overlapping atoms.
///
/// Coinciding isolated atoms merge with class dominance and infinite rank
/// absorbing; isolated atoms at a cluster limit are absorbed into it; a
/// cluster whose leading points meet any other described point is split
/// into those leading points (as isolated atoms, merged the same way) and a
/// collision-free tail. The result depends only on the multiset of inputs.
/// Throws collision_depth_exceeded for same-limit clusters with different
/// ratios that are found to intersect.
SpectralProfile merge_atoms(std::vector<IsolatedAtom> isolated, std::vector<ClusterAtom> clusters,
                            std::size_t depth = kDefaultCollisionDepth);

struct DerivedSets {
  PointSet spectrum;           // σ
  PointSet isolated;           // iso σ
  PointSet accumulation;       // acc σ (cluster limits)
  PointSet poles;              // Π
  PointSet finite_rank_poles;  // Π₀
  PointSet iso_nonpoles;       // I = iso σ ∖ Π
  PointSet drazin;             // σ_DR = acc σ ∪ I
  PointSet bweyl;              // σ_BW, equal to σ_DR in the model class
  PointSet weyl;               // σ_w = σ ∖ Π₀
};

DerivedSets derive_sets(const SpectralProfile& p, const ValidationOptions& opts = {kDefaultCollisionDepth, true});

struct OperatorFlags {
  bool nilpotent = false;
  bool quasinilpotent = false;
  bool algebraic = false;
  bool drazin_invertible = false;
  bool zero_in_spectrum = false;
  ZeroClass zero_class = ZeroClass::absent;
};

ZeroClass zero_class(const SpectralProfile& p);
/// True when σ(p) contains a nonzero point.
bool has_nonzero_point(const SpectralProfile& p);
OperatorFlags derive_flags(const SpectralProfile& p, const ValidationOptions& opts = {kDefaultCollisionDepth, true});

}  // namespace specalc

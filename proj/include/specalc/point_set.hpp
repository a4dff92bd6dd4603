#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "specalc/gaussian_rational.hpp"

namespace specalc {

inline constexpr std::size_t kDefaultCollisionDepth = 64;

/// The points limit + scale·ratioⁿ for n >= 1. The limit itself is not a
/// member. Requires scale != 0 and 0 < |ratio|² < 1.
struct GeometricFamily {
  GaussianRational limit;
  GaussianRational scale;
  GaussianRational ratio;

  GaussianRational point(unsigned n) const { return limit + scale * pow(ratio, n); }
  std::optional<unsigned> index_of(const GaussianRational& p) const {
    return geom_member(limit, scale, ratio, p);
  }
  /// Same family scaled by a nonzero factor: ν·(c + r qⁿ) = νc + νr qⁿ.
  GeometricFamily scaled(const GaussianRational& factor) const {
    return {limit * factor, scale * factor, ratio};
  }
  /// The family with its first n points removed.
  GeometricFamily tail_after(unsigned n) const { return {limit, scale * pow(ratio, n), ratio}; }

  friend bool operator==(const GeometricFamily& a, const GeometricFamily& b) {
    return a.limit == b.limit && a.scale == b.scale && a.ratio == b.ratio;
  }
  friend bool operator<(const GeometricFamily& a, const GeometricFamily& b) {
    if (a.limit != b.limit) return a.limit < b.limit;
    if (a.scale != b.scale) return a.scale < b.scale;
    return a.ratio < b.ratio;
  }
};

/// How two geometric families intersect.
struct FamilyOverlap {
  enum class Kind {
    disjoint,
    finite,     // finitely many shared points, listed in `pairs`
    tail,       // same limit and ratio, one is a tail of the other
    ambiguous,  // same limit, different ratios, shared points found
  };
  Kind kind = Kind::disjoint;
  std::vector<std::pair<unsigned, unsigned>> pairs;  // (index in a, index in b)
  // For Kind::tail: a.point(n) == b.point(n + shift).
  long shift = 0;
};

/// Decides every shared point of two families. Families with distinct limits
/// share finitely many points and the answer is exact. Families with the same
/// limit and ratio are either disjoint or tail-related. Families with the
/// same limit and different ratios are compared up to `depth` points only.
FamilyOverlap family_overlap(const GeometricFamily& a, const GeometricFamily& b,
                             std::size_t depth = kDefaultCollisionDepth);

/// A finite union of isolated points and geometric families, kept in a
/// deterministic order. Membership and inclusion are decided exactly except
/// for the same-limit/different-ratio case, which throws
/// collision_depth_exceeded when it cannot be settled within `depth`.
class PointSet {
 public:
  PointSet() = default;
  PointSet(std::initializer_list<GaussianRational> points);

  void insert(const GaussianRational& p) { points_.insert(p); }
  void insert(const GeometricFamily& f) { families_.insert(f); }
  void insert_all(const PointSet& other);

  const std::set<GaussianRational>& points() const noexcept { return points_; }
  const std::set<GeometricFamily>& families() const noexcept { return families_; }

  bool empty() const noexcept { return points_.empty() && families_.empty(); }
  bool contains(const GaussianRational& p) const;

  bool subset_of(const PointSet& other, std::size_t depth = kDefaultCollisionDepth) const;
  bool same_as(const PointSet& other, std::size_t depth = kDefaultCollisionDepth) const {
    return subset_of(other, depth) && other.subset_of(*this, depth);
  }
  /// Members of *this not in other: uncovered points, the finite uncovered
  /// heads of families whose tails are covered, and whole families otherwise.
  PointSet missing_from(const PointSet& other, std::size_t depth = kDefaultCollisionDepth) const;

  /// Canonical representative: families extended backwards over listed
  /// points, tails of other families dropped, covered points dropped.
  PointSet simplified() const;

  /// {xy : x in a, y in b}. Throws not_finitely_representable when both
  /// sides contain families.
  static PointSet product(const PointSet& a, const PointSet& b);
  static PointSet set_union(const PointSet& a, const PointSet& b);

  std::string to_string() const;

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.points_ == b.points_ && a.families_ == b.families_;
  }

 private:
  bool family_covered(const GeometricFamily& f, const PointSet& other, std::size_t depth,
                      PointSet* missing) const;

  std::set<GaussianRational> points_;
  std::set<GeometricFamily> families_;
};

}  // namespace specalc

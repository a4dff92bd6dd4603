#include "specalc/point_set.hpp"

#include <map>

#include "specalc/errors.hpp"

namespace specalc {

namespace {

// Indices n >= 1 of the points of f with |f(n) - f.limit|² >= bound.
// Finite because |scale|²|ratio|²ⁿ strictly decreases.
template <typename Fn>
void for_each_far_point(const GeometricFamily& f, const Rational& bound, Fn&& fn) {
  GaussianRational offset = f.scale * f.ratio;
  for (unsigned n = 1; offset.abs_sq() >= bound; ++n) {
    fn(n, f.limit + offset);
    offset *= f.ratio;
  }
}

}  // namespace

FamilyOverlap family_overlap(const GeometricFamily& a, const GeometricFamily& b, std::size_t depth) {
  FamilyOverlap out;
  if (a.limit != b.limit) {
    // A shared point lies at distance >= |ca - cb|/2 from at least one limit,
    // so scanning the "far" points of each family finds every collision.
    const Rational bound = (a.limit - b.limit).abs_sq() / 4;
    std::set<std::pair<unsigned, unsigned>> found;
    for_each_far_point(a, bound, [&](unsigned n, const GaussianRational& p) {
      if (auto m = b.index_of(p)) found.emplace(n, *m);
    });
    for_each_far_point(b, bound, [&](unsigned m, const GaussianRational& p) {
      if (auto n = a.index_of(p)) found.emplace(*n, m);
    });
    if (!found.empty()) {
      out.kind = FamilyOverlap::Kind::finite;
      out.pairs.assign(found.begin(), found.end());
    }
    return out;
  }
  if (a.ratio == b.ratio) {
    // a(n) == b(m)  <=>  a.scale / b.scale == ratio^(m - n).
    const GaussianRational t = a.scale / b.scale;
    if (auto k = power_index(a.ratio, t)) {
      out.kind = FamilyOverlap::Kind::tail;
      out.shift = static_cast<long>(*k);
    } else if (auto k2 = power_index(a.ratio, GaussianRational(1) / t)) {
      out.kind = FamilyOverlap::Kind::tail;
      out.shift = -static_cast<long>(*k2);
    }
    return out;
  }
  std::map<GaussianRational, unsigned> seen;
  for (unsigned m = 1; m <= depth; ++m) seen.emplace(b.point(m), m);
  for (unsigned n = 1; n <= depth; ++n) {
    auto it = seen.find(a.point(n));
    if (it != seen.end()) out.pairs.emplace_back(n, it->second);
  }
  if (!out.pairs.empty()) out.kind = FamilyOverlap::Kind::ambiguous;
  return out;
}

PointSet::PointSet(std::initializer_list<GaussianRational> points) : points_(points) {}

void PointSet::insert_all(const PointSet& other) {
  points_.insert(other.points_.begin(), other.points_.end());
  families_.insert(other.families_.begin(), other.families_.end());
}

bool PointSet::contains(const GaussianRational& p) const {
  if (points_.count(p) != 0) return true;
  for (const auto& f : families_) {
    if (f.index_of(p)) return true;
  }
  return false;
}

bool PointSet::family_covered(const GeometricFamily& f, const PointSet& other, std::size_t depth,
                              PointSet* missing) const {
  bool same_limit_other_ratio = false;
  std::optional<std::vector<GaussianRational>> best_heads;
  for (const auto& g : other.families_) {
    if (g.limit != f.limit) continue;
    if (g.ratio != f.ratio) {
      same_limit_other_ratio = true;
      continue;
    }
    FamilyOverlap ov = family_overlap(f, g, depth);
    if (ov.kind != FamilyOverlap::Kind::tail) continue;
    // f(n) == g(n + shift); points with n + shift < 1 are not in g.
    std::vector<GaussianRational> heads;
    for (long n = 1; n + ov.shift < 1; ++n) {
      GaussianRational p = f.point(static_cast<unsigned>(n));
      if (!other.contains(p)) heads.push_back(std::move(p));
    }
    if (!best_heads || heads.size() < best_heads->size()) best_heads = std::move(heads);
  }
  if (best_heads) {
    if (missing != nullptr) {
      for (const auto& p : *best_heads) missing->insert(p);
    }
    return best_heads->empty();
  }
  if (same_limit_other_ratio) {
    bool all_found = true;
    for (unsigned n = 1; n <= depth && all_found; ++n) all_found = other.contains(f.point(n));
    if (all_found) {
      throw Error(ErrorCode::collision_depth_exceeded,
                  "cannot decide inclusion of family with limit " + f.limit.to_string() +
                      " within depth " + std::to_string(depth));
    }
  }
  if (missing != nullptr) missing->insert(f);
  return false;
}

bool PointSet::subset_of(const PointSet& other, std::size_t depth) const {
  for (const auto& p : points_) {
    if (!other.contains(p)) return false;
  }
  for (const auto& f : families_) {
    if (!family_covered(f, other, depth, nullptr)) return false;
  }
  return true;
}

PointSet PointSet::missing_from(const PointSet& other, std::size_t depth) const {
  PointSet out;
  for (const auto& p : points_) {
    if (!other.contains(p)) out.insert(p);
  }
  for (const auto& f : families_) family_covered(f, other, depth, &out);
  return out;
}

PointSet PointSet::simplified() const {
  std::set<GaussianRational> points = points_;
  std::vector<GeometricFamily> families(families_.begin(), families_.end());

  // Extend each family backwards while its predecessor point is listed.
  for (auto& f : families) {
    for (;;) {
      GaussianRational first = f.limit + f.scale;
      auto it = points.find(first);
      if (it == points.end()) break;
      points.erase(it);
      f.scale /= f.ratio;
    }
  }
  std::set<GeometricFamily> kept;
  for (std::size_t i = 0; i < families.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < families.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& a = families[i];
      const auto& b = families[j];
      if (a.limit != b.limit || a.ratio != b.ratio) continue;
      FamilyOverlap ov = family_overlap(a, b);
      // a is a tail of b when shift >= 0; break ties between equal
      // families by position.
      if (ov.kind == FamilyOverlap::Kind::tail && (ov.shift > 0 || (ov.shift == 0 && j < i))) {
        redundant = true;
      }
    }
    if (!redundant) kept.insert(families[i]);
  }
  PointSet out;
  out.families_ = std::move(kept);
  for (const auto& p : points) {
    bool covered = false;
    for (const auto& f : out.families_) {
      if (f.index_of(p)) {
        covered = true;
        break;
      }
    }
    if (!covered) out.points_.insert(p);
  }
  return out;
}

PointSet PointSet::product(const PointSet& a, const PointSet& b) {
  if (!a.families_.empty() && !b.families_.empty()) {
    throw Error(ErrorCode::not_finitely_representable,
                "product of two sets with accumulating families");
  }
  PointSet out;
  for (const auto& x : a.points_) {
    for (const auto& y : b.points_) out.insert(x * y);
  }
  auto scale_families = [&out](const PointSet& pts, const PointSet& fams) {
    for (const auto& x : pts.points_) {
      for (const auto& f : fams.families_) {
        if (x.is_zero()) {
          out.insert(GaussianRational(0));
        } else {
          out.insert(f.scaled(x));
        }
      }
    }
  };
  scale_families(a, b);
  scale_families(b, a);
  return out;
}

PointSet PointSet::set_union(const PointSet& a, const PointSet& b) {
  PointSet out = a;
  out.insert_all(b);
  return out;
}

std::string PointSet::to_string() const {
  std::string s = "{";
  bool first = true;
  auto sep = [&] {
    if (!first) s += ", ";
    first = false;
  };
  for (const auto& p : points_) {
    sep();
    s += p.to_string();
  }
  for (const auto& f : families_) {
    sep();
    s += f.limit.to_string() + " + (" + f.scale.to_string() + ")*(" + f.ratio.to_string() + ")^n";
  }
  return s + "}";
}

}  // namespace specalc

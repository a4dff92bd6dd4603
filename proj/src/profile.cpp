#include "specalc/profile.hpp"

#include <algorithm>
#include <map>

#include "specalc/errors.hpp"

namespace specalc {

std::string_view to_string(PointClass c) {
  return c == PointClass::pole ? "pole" : "iso_nonpole";
}
std::string_view to_string(Rank r) { return r == Rank::finite ? "fin" : "inf"; }
std::string_view to_string(SpectralClass c) {
  switch (c) {
    case SpectralClass::pole: return "pole";
    case SpectralClass::iso_nonpole: return "iso_nonpole";
    case SpectralClass::acc: return "acc";
  }
  return "?";
}
std::string_view to_string(ZeroClass c) {
  switch (c) {
    case ZeroClass::absent: return "absent";
    case ZeroClass::pole: return "pole";
    case ZeroClass::iso_nonpole: return "iso_nonpole";
    case ZeroClass::acc: return "acc";
  }
  return "?";
}

namespace {

bool isolated_less(const IsolatedAtom& a, const IsolatedAtom& b) { return a.point < b.point; }
bool cluster_less(const ClusterAtom& a, const ClusterAtom& b) { return a.family() < b.family(); }

bool well_formed(const ClusterAtom& c) {
  return !c.scale.is_zero() && !c.ratio.is_zero() && gq_abs_sq_lt_one(c.ratio);
}

}  // namespace

SpectralProfile::SpectralProfile(std::vector<IsolatedAtom> isolated, std::vector<ClusterAtom> clusters)
    : isolated_(std::move(isolated)), clusters_(std::move(clusters)) {
  std::stable_sort(isolated_.begin(), isolated_.end(), isolated_less);
  std::stable_sort(clusters_.begin(), clusters_.end(), cluster_less);
}

const IsolatedAtom* SpectralProfile::find_isolated(const GaussianRational& p) const {
  auto it = std::lower_bound(isolated_.begin(), isolated_.end(), p,
                             [](const IsolatedAtom& a, const GaussianRational& x) { return a.point < x; });
  return (it != isolated_.end() && it->point == p) ? &*it : nullptr;
}

std::vector<std::string> validate_profile(const SpectralProfile& p, const ValidationOptions& opts) {
  std::vector<std::string> out;
  if (p.empty()) {
    out.emplace_back("profile has no atoms (spectra are nonempty)");
    return out;
  }
  bool infinite_dimensional = !p.clusters().empty();
  const auto& iso = p.isolated();
  for (std::size_t i = 0; i < iso.size(); ++i) {
    const auto& a = iso[i];
    const std::string at = a.point.to_string();
    if (a.order && *a.order == 0) out.push_back("pole order at " + at + " must be positive");
    if (a.cls == PointClass::iso_nonpole) {
      if (a.rank == Rank::finite) out.push_back("iso-non-pole at " + at + " must have infinite rank");
      if (a.order) out.push_back("iso-non-pole at " + at + " cannot carry a pole order");
    }
    if (a.cls == PointClass::iso_nonpole || a.rank == Rank::infinite) infinite_dimensional = true;
    if (i > 0 && iso[i - 1].point == a.point) out.push_back("duplicate isolated point " + at);
  }

  const auto& cl = p.clusters();
  std::vector<bool> ok(cl.size());
  for (std::size_t i = 0; i < cl.size(); ++i) {
    const auto& c = cl[i];
    const std::string at = "cluster at " + c.limit.to_string();
    ok[i] = well_formed(c);
    if (!ok[i]) {
      out.push_back(at + " needs r != 0 and 0 < |q|^2 < 1");
      continue;
    }
    if (c.seq_class == PointClass::iso_nonpole && c.seq_rank == Rank::finite) {
      out.push_back(at + ": iso-non-pole sequence points must have infinite rank");
    }
    if (c.family().index_of(GaussianRational(0))) out.push_back(at + " passes through 0");
    for (const auto& a : iso) {
      if (a.point == c.limit) {
        out.push_back("limit " + c.limit.to_string() + " collides with isolated point");
      } else if (auto n = c.family().index_of(a.point)) {
        out.push_back("isolated point " + a.point.to_string() + " lies on " + at + " (n=" +
                      std::to_string(*n) + ")");
      }
    }
  }
  for (std::size_t i = 0; i < cl.size(); ++i) {
    if (!ok[i]) continue;
    for (std::size_t j = i + 1; j < cl.size(); ++j) {
      if (!ok[j]) continue;
      const auto fi = cl[i].family();
      const auto fj = cl[j].family();
      if (fi.limit == fj.limit && !opts.allow_shared_limits) {
        out.push_back("duplicate cluster limit " + fi.limit.to_string());
      }
      if (fi.index_of(fj.limit)) out.push_back("limit " + fj.limit.to_string() + " lies on another cluster");
      if (fj.index_of(fi.limit)) out.push_back("limit " + fi.limit.to_string() + " lies on another cluster");
      FamilyOverlap ov = family_overlap(fi, fj, opts.collision_depth);
      if (ov.kind != FamilyOverlap::Kind::disjoint) {
        out.push_back("clusters at " + fi.limit.to_string() + " and " + fj.limit.to_string() +
                      " share sequence points");
      }
    }
  }
  if (!infinite_dimensional) {
    out.emplace_back("no infinite-dimensional atom (needs a cluster, an iso-non-pole or an infinite-rank pole)");
  }
  return out;
}

void require_valid(const SpectralProfile& p, const ValidationOptions& opts) {
  auto violations = validate_profile(p, opts);
  if (violations.empty()) return;
  std::string msg = "invalid profile:";
  for (const auto& v : violations) msg += "\n  " + v;
  throw Error(ErrorCode::invalid_profile, msg);
}

IsolatedAtom merge_isolated(IsolatedAtom a, const IsolatedAtom& b) {
  a.cls = dominant(a.cls, b.cls);
  a.rank = absorb(a.rank, b.rank);
  if (a.cls == PointClass::iso_nonpole) {
    a.rank = Rank::infinite;
    a.order.reset();
  } else if (b.order) {
    a.order = a.order ? std::max(*a.order, *b.order) : b.order;
  }
  return a;
}

namespace {

// Merges coinciding points and drops those sitting on a cluster limit.
std::vector<IsolatedAtom> settle_isolated(const std::vector<IsolatedAtom>& in,
                                          const std::vector<ClusterAtom>& clusters) {
  std::map<GaussianRational, IsolatedAtom> by_point;
  for (const auto& a : in) {
    auto [it, inserted] = by_point.emplace(a.point, a);
    if (inserted) {
      if (a.cls == PointClass::iso_nonpole) {
        it->second.rank = Rank::infinite;
        it->second.order.reset();
      }
    } else {
      it->second = merge_isolated(it->second, a);
    }
  }
  for (const auto& c : clusters) by_point.erase(c.limit);
  std::vector<IsolatedAtom> out;
  out.reserve(by_point.size());
  for (auto& [_, a] : by_point) out.push_back(std::move(a));
  return out;
}

ClusterAtom merge_cluster(ClusterAtom a, const ClusterAtom& b) {
  a.seq_class = dominant(a.seq_class, b.seq_class);
  a.seq_rank = absorb(a.seq_rank, b.seq_rank);
  if (a.seq_class == PointClass::iso_nonpole) a.seq_rank = Rank::infinite;
  return a;
}

void emit_heads(const ClusterAtom& c, unsigned count, std::vector<IsolatedAtom>& sink) {
  for (unsigned n = 1; n <= count; ++n) {
    sink.push_back({c.family().point(n), c.seq_class, c.seq_rank, std::nullopt});
  }
}

}  // namespace

SpectralProfile merge_atoms(std::vector<IsolatedAtom> isolated, std::vector<ClusterAtom> clusters,
                            std::size_t depth) {
  // Identical clusters.
  std::map<GeometricFamily, ClusterAtom> by_family;
  for (auto& c : clusters) {
    if (c.seq_class == PointClass::iso_nonpole) c.seq_rank = Rank::infinite;
    auto [it, inserted] = by_family.emplace(c.family(), c);
    if (!inserted) it->second = merge_cluster(it->second, c);
  }

  // A cluster containing another as a tail is split into leading points and
  // that tail, which then merges with the contained cluster.
  for (bool changed = true; changed;) {
    changed = false;
    for (auto i = by_family.begin(); i != by_family.end() && !changed; ++i) {
      for (auto j = by_family.begin(); j != by_family.end() && !changed; ++j) {
        if (i == j || i->first.limit != j->first.limit || i->first.ratio != j->first.ratio) continue;
        FamilyOverlap ov = family_overlap(i->first, j->first, depth);
        if (ov.kind != FamilyOverlap::Kind::tail || ov.shift <= 0) continue;
        // i(n) == j(n + shift): i is the tail of j after `shift` points.
        ClusterAtom outer = j->second;
        emit_heads(outer, static_cast<unsigned>(ov.shift), isolated);
        i->second = merge_cluster(i->second, outer);
        by_family.erase(j);
        changed = true;
      }
    }
  }

  std::vector<ClusterAtom> merged;
  for (auto& [_, c] : by_family) merged.push_back(c);

  for (std::size_t i = 0; i < merged.size(); ++i) {
    for (std::size_t j = i + 1; j < merged.size(); ++j) {
      const auto fi = merged[i].family();
      const auto fj = merged[j].family();
      if (fi.limit == fj.limit && fi.ratio != fj.ratio &&
          family_overlap(fi, fj, depth).kind == FamilyOverlap::Kind::ambiguous) {
        throw Error(ErrorCode::collision_depth_exceeded,
                    "clusters at " + fi.limit.to_string() + " with different ratios intersect");
      }
    }
  }

  isolated = settle_isolated(isolated, merged);

  // Highest colliding index per cluster.
  std::vector<unsigned> cut(merged.size(), 0);
  for (std::size_t i = 0; i < merged.size(); ++i) {
    const auto fi = merged[i].family();
    for (const auto& a : isolated) {
      if (auto n = fi.index_of(a.point)) cut[i] = std::max(cut[i], *n);
    }
    for (std::size_t j = 0; j < merged.size(); ++j) {
      if (i == j) continue;
      const auto fj = merged[j].family();
      if (auto n = fi.index_of(fj.limit)) cut[i] = std::max(cut[i], *n);
      if (j < i || fi.limit == fj.limit) continue;
      FamilyOverlap ov = family_overlap(fi, fj, depth);
      for (auto [n, m] : ov.pairs) {
        cut[i] = std::max(cut[i], n);
        cut[j] = std::max(cut[j], m);
      }
    }
  }
  for (std::size_t i = 0; i < merged.size(); ++i) {
    if (cut[i] == 0) continue;
    emit_heads(merged[i], cut[i], isolated);
    const auto tail = merged[i].family().tail_after(cut[i]);
    merged[i].scale = tail.scale;
  }
  isolated = settle_isolated(isolated, merged);
  return SpectralProfile(std::move(isolated), std::move(merged));
}

ZeroClass zero_class(const SpectralProfile& p) {
  const GaussianRational zero(0);
  for (const auto& c : p.clusters()) {
    if (c.limit.is_zero()) return ZeroClass::acc;
  }
  if (const auto* a = p.find_isolated(zero)) {
    return a->cls == PointClass::pole ? ZeroClass::pole : ZeroClass::iso_nonpole;
  }
  return ZeroClass::absent;
}

bool has_nonzero_point(const SpectralProfile& p) {
  if (p.has_clusters()) return true;
  return std::any_of(p.isolated().begin(), p.isolated().end(),
                     [](const IsolatedAtom& a) { return !a.point.is_zero(); });
}

OperatorFlags derive_flags(const SpectralProfile& p, const ValidationOptions& opts) {
  require_valid(p, opts);
  OperatorFlags f;
  const auto& iso = p.isolated();
  const bool only_zero = !p.has_clusters() && iso.size() == 1 && iso.front().point.is_zero();
  f.quasinilpotent = only_zero;
  f.nilpotent = only_zero && iso.front().cls == PointClass::pole;
  f.algebraic = !p.has_clusters() && std::all_of(iso.begin(), iso.end(), [](const IsolatedAtom& a) {
    return a.cls == PointClass::pole;
  });
  f.zero_class = zero_class(p);
  f.zero_in_spectrum = f.zero_class != ZeroClass::absent;
  f.drazin_invertible = f.zero_class == ZeroClass::absent || f.zero_class == ZeroClass::pole;
  return f;
}

DerivedSets derive_sets(const SpectralProfile& p, const ValidationOptions& opts) {
  require_valid(p, opts);
  DerivedSets d;
  for (const auto& a : p.isolated()) {
    d.spectrum.insert(a.point);
    d.isolated.insert(a.point);
    if (a.cls == PointClass::pole) {
      d.poles.insert(a.point);
      if (a.rank == Rank::finite) {
        d.finite_rank_poles.insert(a.point);
      } else {
        d.weyl.insert(a.point);
      }
    } else {
      d.iso_nonpoles.insert(a.point);
      d.drazin.insert(a.point);
      d.weyl.insert(a.point);
    }
  }
  for (const auto& c : p.clusters()) {
    const auto fam = c.family();
    d.spectrum.insert(fam);
    d.spectrum.insert(c.limit);
    d.isolated.insert(fam);
    d.accumulation.insert(c.limit);
    d.drazin.insert(c.limit);
    d.weyl.insert(c.limit);
    if (c.seq_class == PointClass::pole) {
      d.poles.insert(fam);
      if (c.seq_rank == Rank::finite) {
        d.finite_rank_poles.insert(fam);
      } else {
        d.weyl.insert(fam);
      }
    } else {
      d.iso_nonpoles.insert(fam);
      d.drazin.insert(fam);
      d.weyl.insert(fam);
    }
  }
  d.bweyl = d.drazin;
  return d;
}

}  // namespace specalc

#include "specalc/product.hpp"

#include <set>
#include <stdexcept>

#include "specalc/errors.hpp"

namespace specalc {

std::string_view to_string(ProductMode m) { return m == ProductMode::tensor ? "tensor" : "elementary"; }

namespace {

FactorPoint from_isolated(const IsolatedAtom& a) {
  return {a.point, FactorPoint::Role::isolated, a.cls, a.rank};
}

// The other factor seen from a point of this one: isolated, limit, or
// sequence point of one of its clusters.
void match_partner(const SpectralProfile& partner, const GaussianRational& value,
                   const FactorPoint& self, bool self_is_left,
                   std::vector<std::pair<FactorPoint, FactorPoint>>& pairs) {
  auto push = [&](FactorPoint other) {
    if (self_is_left) {
      pairs.emplace_back(self, std::move(other));
    } else {
      pairs.emplace_back(std::move(other), self);
    }
  };
  if (const auto* iso = partner.find_isolated(value)) push(from_isolated(*iso));
  for (const auto& c : partner.clusters()) {
    if (c.limit == value) {
      push({value, FactorPoint::Role::limit, PointClass::pole, Rank::infinite});
    } else if (c.family().index_of(value)) {
      push({value, FactorPoint::Role::sequence, c.seq_class, c.seq_rank});
    }
  }
}

bool is_nilpotent(const SpectralProfile& p) {
  return !p.has_clusters() && p.isolated().size() == 1 && p.isolated().front().point.is_zero() &&
         p.isolated().front().cls == PointClass::pole;
}

bool spectrum_is_zero(const SpectralProfile& p) {
  return !p.has_clusters() && p.isolated().size() == 1 && p.isolated().front().point.is_zero();
}

// Rank of the spectral subspace of the product at 0: finite only if every
// block paired with a zero block is finite dimensional. Clusters live on
// infinite-dimensional subspaces as a whole.
Rank zero_rank(const SpectralProfile& a, const SpectralProfile& b) {
  Rank rank = Rank::finite;
  auto visit = [&rank](const SpectralProfile& zero_side, const SpectralProfile& other) {
    const auto* z = zero_side.find_isolated(GaussianRational(0));
    if (z == nullptr) return;
    rank = absorb(rank, z->rank);
    if (other.has_clusters()) rank = Rank::infinite;
    for (const auto& o : other.isolated()) rank = absorb(rank, o.rank);
  };
  visit(a, b);
  visit(b, a);
  return rank;
}

}  // namespace

Factorization factorize(const SpectralProfile& a, const SpectralProfile& b, const GaussianRational& lambda) {
  if (lambda.is_zero()) throw std::invalid_argument("factorize: lambda must be nonzero");
  Factorization f{lambda, {}};
  for (const auto& mu : a.isolated()) {
    if (mu.point.is_zero()) continue;
    match_partner(b, lambda / mu.point, from_isolated(mu), true, f.pairs);
  }
  for (const auto& nu : b.isolated()) {
    if (nu.point.is_zero()) continue;
    // Isolated × isolated pairs were found above.
    const GaussianRational mu = lambda / nu.point;
    const FactorPoint self = from_isolated(nu);
    for (const auto& c : a.clusters()) {
      if (c.limit == mu) {
        f.pairs.emplace_back(FactorPoint{mu, FactorPoint::Role::limit, PointClass::pole, Rank::infinite}, self);
      } else if (c.family().index_of(mu)) {
        f.pairs.emplace_back(FactorPoint{mu, FactorPoint::Role::sequence, c.seq_class, c.seq_rank}, self);
      }
    }
  }
  return f;
}

ZeroVerdict classify_zero_detailed(const SpectralProfile& a, const SpectralProfile& b) {
  const ZeroClass za = zero_class(a);
  const ZeroClass zb = zero_class(b);
  if (za == ZeroClass::absent && zb == ZeroClass::absent) return {ZeroClass::absent, "zero_absent"};

  // σ(A) = {0} or σ(B) = {0}: the product is quasi-nilpotent.
  if (is_nilpotent(a) || is_nilpotent(b)) return {ZeroClass::pole, "nilpotent_factor"};
  if (spectrum_is_zero(a) || spectrum_is_zero(b)) {
    // The quasi-nilpotent factor is not nilpotent and neither is the other.
    return {ZeroClass::iso_nonpole, "quasinilpotent_factor"};
  }

  // Both factors now have nonzero spectral points.
  if (za == ZeroClass::acc || zb == ZeroClass::acc) return {ZeroClass::acc, "accumulation_at_zero"};

  const bool pole_a = za == ZeroClass::pole;
  const bool pole_b = zb == ZeroClass::pole;
  const bool inp_a = za == ZeroClass::iso_nonpole;
  const bool inp_b = zb == ZeroClass::iso_nonpole;
  if (inp_a && inp_b) return {ZeroClass::iso_nonpole, "iso_nonpole_meets_iso_nonpole"};
  if (inp_a || inp_b) {
    // The partner is not nilpotent, so the quasi-nilpotent part survives.
    if (pole_a || pole_b) return {ZeroClass::iso_nonpole, "iso_nonpole_meets_pole"};
    return {ZeroClass::iso_nonpole, "iso_nonpole_meets_invertible"};
  }
  if (pole_a && pole_b) return {ZeroClass::pole, "pole_meets_pole"};
  return {ZeroClass::pole, "pole_meets_invertible"};
}

NonzeroVerdict classify_nonzero(const Factorization& f) {
  if (f.lambda.is_zero()) throw std::invalid_argument("classify_nonzero: lambda must be nonzero");
  if (f.pairs.empty()) {
    throw Error(ErrorCode::empty_factorization, "no factorization of " + f.lambda.to_string());
  }
  bool limit = false;
  bool inp = false;
  Rank rank = Rank::finite;
  for (const auto& [mu, nu] : f.pairs) {
    limit = limit || mu.role == FactorPoint::Role::limit || nu.role == FactorPoint::Role::limit;
    inp = inp || mu.cls == PointClass::iso_nonpole || nu.cls == PointClass::iso_nonpole;
    rank = absorb(rank, absorb(mu.rank, nu.rank));
  }
  if (limit) return {SpectralClass::acc, Rank::infinite, "accumulation_dominates"};
  if (inp) return {SpectralClass::iso_nonpole, Rank::infinite, "iso_nonpole_factor"};
  return {SpectralClass::pole, rank, "pole_times_pole"};
}

ProductResult product_profile_detailed(const SpectralProfile& a, const SpectralProfile& b, ProductMode /*mode*/,
                                       std::size_t depth) {
  const ValidationOptions relaxed{depth, true};
  require_valid(a, relaxed);
  require_valid(b, relaxed);
  if (a.has_clusters() && b.has_clusters()) {
    throw Error(ErrorCode::not_finitely_representable,
                "both factors accumulate; the product's accumulation set is infinite");
  }

  ProductResult out;
  std::vector<IsolatedAtom> isolated;
  std::vector<ClusterAtom> clusters;

  const ZeroVerdict zero = classify_zero_detailed(a, b);
  if (zero.cls == ZeroClass::pole || zero.cls == ZeroClass::iso_nonpole) {
    const PointClass cls = zero.cls == ZeroClass::pole ? PointClass::pole : PointClass::iso_nonpole;
    const Rank rank = cls == PointClass::iso_nonpole ? Rank::infinite : zero_rank(a, b);
    isolated.push_back({GaussianRational(0), cls, rank, std::nullopt});
  }
  if (zero.cls != ZeroClass::absent) {
    out.provenance.push_back({GaussianRational(0), false,
                              zero.cls == ZeroClass::acc ? SpectralClass::acc
                              : zero.cls == ZeroClass::pole ? SpectralClass::pole
                                                            : SpectralClass::iso_nonpole,
                              std::string(zero.rule)});
  }

  std::set<GaussianRational> products;
  for (const auto& mu : a.isolated()) {
    for (const auto& nu : b.isolated()) {
      GaussianRational lambda = mu.point * nu.point;
      if (!lambda.is_zero()) products.insert(std::move(lambda));
    }
  }
  for (const auto& lambda : products) {
    const NonzeroVerdict v = classify_nonzero(factorize(a, b, lambda));
    out.provenance.push_back({lambda, false, v.cls, std::string(v.rule)});
    if (v.cls == SpectralClass::acc) continue;  // supplied by a scaled cluster limit
    isolated.push_back({lambda, v.cls == SpectralClass::pole ? PointClass::pole : PointClass::iso_nonpole,
                        v.rank, std::nullopt});
  }

  auto scale_clusters = [&](const SpectralProfile& with_clusters, const SpectralProfile& other) {
    for (const auto& c : with_clusters.clusters()) {
      for (const auto& nu : other.isolated()) {
        if (nu.point.is_zero()) continue;
        const auto fam = c.family().scaled(nu.point);
        const PointClass cls = dominant(c.seq_class, nu.cls);
        clusters.push_back({fam.limit, fam.scale, fam.ratio, cls, absorb(c.seq_rank, nu.rank)});
        out.provenance.push_back({fam.limit, true,
                                  cls == PointClass::pole ? SpectralClass::pole : SpectralClass::iso_nonpole,
                                  "scaled_cluster"});
      }
    }
  };
  scale_clusters(a, b);
  scale_clusters(b, a);

  out.profile = merge_atoms(std::move(isolated), std::move(clusters), depth);
  return out;
}

}  // namespace specalc

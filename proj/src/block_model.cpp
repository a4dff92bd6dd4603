#include "specalc/block_model.hpp"

#include <algorithm>
#include <map>

#include "specalc/errors.hpp"

namespace specalc {

bool BlockModel::has_clusters() const {
  return std::any_of(blocks.begin(), blocks.end(),
                     [](const PrimitiveBlock& b) { return std::holds_alternative<ClusterDiag>(b); });
}

SpectralProfile model_profile(const BlockModel& m, std::size_t depth) {
  std::map<GaussianRational, IsolatedAtom> by_point;
  std::vector<ClusterAtom> clusters;
  auto add = [&by_point](IsolatedAtom atom) {
    auto [it, inserted] = by_point.emplace(atom.point, atom);
    if (!inserted) it->second = merge_isolated(it->second, atom);
  };
  for (const auto& block : m.blocks) {
    if (const auto* jp = std::get_if<JordanPole>(&block)) {
      add({jp->lambda, PointClass::pole, jp->rank, jp->order});
    } else if (const auto* qn = std::get_if<QuasiNil>(&block)) {
      add({qn->lambda, PointClass::iso_nonpole, Rank::infinite, std::nullopt});
    } else {
      const auto& cd = std::get<ClusterDiag>(block);
      clusters.push_back({cd.limit, cd.scale, cd.ratio, PointClass::pole, cd.rank_each});
    }
  }
  std::vector<IsolatedAtom> isolated;
  for (auto& [_, a] : by_point) isolated.push_back(std::move(a));
  SpectralProfile p(std::move(isolated), std::move(clusters));
  require_valid(p, {depth, false});
  return p;
}

namespace {

Rank block_rank(const PrimitiveBlock& b) {
  if (const auto* jp = std::get_if<JordanPole>(&b)) return jp->rank;
  return Rank::infinite;
}

IsolatedAtom point(const GaussianRational& lambda, PointClass cls, Rank rank) {
  if (cls == PointClass::iso_nonpole) rank = Rank::infinite;
  return {lambda, cls, rank, std::nullopt};
}

// Products where neither side is a cluster.
std::vector<SpectralAtom> isolated_product(const PrimitiveBlock& p, const PrimitiveBlock& s) {
  const Rank rank = absorb(block_rank(p), block_rank(s));
  const auto* jp_p = std::get_if<JordanPole>(&p);
  const auto* jp_s = std::get_if<JordanPole>(&s);
  if (jp_p && jp_s) {
    // (λ+N)⊗(μ+M) - λμ is nilpotent; at 0 the zero factor is nilpotent.
    return {point(jp_p->lambda * jp_s->lambda, PointClass::pole, rank)};
  }
  const auto* qn_p = std::get_if<QuasiNil>(&p);
  const auto* qn_s = std::get_if<QuasiNil>(&s);
  if (qn_p && qn_s) {
    // Powers of a tensor of two non-nilpotent operators never vanish.
    return {point(qn_p->lambda * qn_s->lambda, PointClass::iso_nonpole, rank)};
  }
  const QuasiNil& qn = qn_p ? *qn_p : *qn_s;
  const JordanPole& jp = jp_p ? *jp_p : *jp_s;
  const GaussianRational lambda = qn.lambda * jp.lambda;
  if (jp.lambda.is_zero()) {
    // (Q⊗N)^k = Qᵏ⊗Nᵏ = 0 once k reaches the order of N.
    return {point(lambda, PointClass::pole, rank)};
  }
  return {point(lambda, PointClass::iso_nonpole, rank)};
}

std::vector<SpectralAtom> cluster_product(const ClusterDiag& cd, const PrimitiveBlock& other) {
  if (std::holds_alternative<ClusterDiag>(other)) {
    throw Error(ErrorCode::not_finitely_representable, "product of two cluster blocks");
  }
  const bool quasi = std::holds_alternative<QuasiNil>(other);
  const GaussianRational mu =
      quasi ? std::get<QuasiNil>(other).lambda : std::get<JordanPole>(other).lambda;
  const PointClass cls = quasi ? PointClass::iso_nonpole : PointClass::pole;
  if (mu.is_zero()) {
    // N⊗D is nilpotent, Q⊗D quasi-nilpotent but never nilpotent; the
    // cluster block is infinite dimensional as a whole.
    return {point(GaussianRational(0), cls, Rank::infinite)};
  }
  const auto fam = GeometricFamily{cd.limit, cd.scale, cd.ratio}.scaled(mu);
  Rank rank = absorb(block_rank(other), cd.rank_each);
  if (cls == PointClass::iso_nonpole) rank = Rank::infinite;
  return {ClusterAtom{fam.limit, fam.scale, fam.ratio, cls, rank}};
}

}  // namespace

std::vector<SpectralAtom> primitive_product(const PrimitiveBlock& p, const PrimitiveBlock& s) {
  if (const auto* cd = std::get_if<ClusterDiag>(&p)) return cluster_product(*cd, s);
  if (const auto* cd = std::get_if<ClusterDiag>(&s)) return cluster_product(*cd, p);
  return isolated_product(p, s);
}

SpectralProfile oracle_product(const BlockModel& a, const BlockModel& b, std::size_t depth) {
  if (a.has_clusters() && b.has_clusters()) {
    throw Error(ErrorCode::not_finitely_representable,
                "both models contain cluster blocks; the product's accumulation set is infinite");
  }
  // The factors must be valid operators in their own right.
  model_profile(a, depth);
  model_profile(b, depth);
  std::vector<IsolatedAtom> isolated;
  std::vector<ClusterAtom> clusters;
  for (const auto& p : a.blocks) {
    for (const auto& s : b.blocks) {
      for (auto& atom : primitive_product(p, s)) {
        if (auto* iso = std::get_if<IsolatedAtom>(&atom)) {
          isolated.push_back(std::move(*iso));
        } else {
          clusters.push_back(std::get<ClusterAtom>(std::move(atom)));
        }
      }
    }
  }
  return merge_atoms(std::move(isolated), std::move(clusters), depth);
}

namespace {

std::string describe(const IsolatedAtom& a) {
  return std::string(to_string(a.cls)) + "(" + a.point.to_string() + ", rank=" + std::string(to_string(a.rank)) +
         ")";
}
std::string describe(const ClusterAtom& c) {
  return "cluster(" + c.limit.to_string() + ", r=" + c.scale.to_string() + ", q=" + c.ratio.to_string() + ", " +
         std::string(to_string(c.seq_class)) + ", rank=" + std::string(to_string(c.seq_rank)) + ")";
}

template <typename Atom>
void diff_atoms(const std::vector<Atom>& left, const std::vector<Atom>& right, std::vector<std::string>& out) {
  for (const auto& a : left) {
    if (std::find(right.begin(), right.end(), a) == right.end()) out.push_back("oracle only: " + describe(a));
  }
  for (const auto& a : right) {
    if (std::find(left.begin(), left.end(), a) == left.end()) out.push_back("calculus only: " + describe(a));
  }
}

}  // namespace

AgreementReport oracle_agreement(const BlockModel& a, const BlockModel& b, ProductMode mode, std::size_t depth) {
  AgreementReport r;
  r.oracle = oracle_product(a, b, depth);
  r.calculus = product_profile(model_profile(a, depth), model_profile(b, depth), mode, depth);
  r.equal = r.oracle == r.calculus;
  if (!r.equal) {
    diff_atoms(r.oracle.isolated(), r.calculus.isolated(), r.diffs);
    diff_atoms(r.oracle.clusters(), r.calculus.clusters(), r.diffs);
  }
  return r;
}

}  // namespace specalc

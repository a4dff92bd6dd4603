#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "specalc/block_model.hpp"

namespace specalc {

/// Parses the operator grammar
///
///   operator  := "sum(" primitive ("," primitive)* ")"
///   primitive := "pole(" gq ["," "ord=" nat] ["," "rank=" ("fin"|"inf")] ")"
///              | "quasinil(" gq ")"
///              | "cluster(" gq "," "r=" gq "," "q=" gq ["," "rank=" ("fin"|"inf")] ")"
///
/// Whitespace and newlines are free; '#' starts a comment running to the end
/// of the line. Throws SyntaxError with 1-based line and column, and
/// validation_error when the described operator is not a valid profile.
BlockModel parse_operator(std::string_view text, std::size_t depth = kDefaultCollisionDepth);

/// Syntax only, no profile validation.
BlockModel parse_operator_unchecked(std::string_view text);

/// Canonical text: every pole carries ord and rank, clusters carry rank only
/// when it is infinite, single spaces after commas.
std::string render_operator(const BlockModel& m);
std::string render_block(const PrimitiveBlock& b);

/// One line per atom, e.g. "0: pole rank=inf ord=2" or
/// "cluster 0 + (1)*(1/2)^n: pole rank=fin".
std::string render_profile(const SpectralProfile& p);

struct GenParams {
  std::uint64_t seed = 0;
  unsigned max_blocks = 4;
  bool allow_clusters = true;
  std::vector<GaussianRational> scalar_pool;  // empty means default_scalar_pool()
};

std::vector<GaussianRational> default_scalar_pool();

/// Deterministic in the parameters; the result always validates and holds
/// at most one cluster.
BlockModel gen_random(const GenParams& p);

/// A corpus pair for seed s: at most one cluster between the two models.
std::pair<BlockModel, BlockModel> gen_pair(std::uint64_t seed, unsigned max_blocks = 4,
                                           const std::vector<GaussianRational>& pool = {});

}  // namespace specalc

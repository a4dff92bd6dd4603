#include "specalc/dsl.hpp"

#include <cctype>
#include <random>

#include "specalc/errors.hpp"

namespace specalc {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  BlockModel parse() {
    BlockModel m;
    expect_word("sum");
    expect('(');
    m.blocks.push_back(primitive());
    while (accept(',')) m.blocks.push_back(primitive());
    expect(')');
    skip();
    if (pos_ != src_.size()) fail("unexpected text after operator");
    return m;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }

  [[noreturn]] void fail_at(std::size_t offset, const std::string& msg) const {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t k = 0; k < offset && k < src_.size(); ++k) {
      if (src_[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw SyntaxError(line, col, msg + " at line " + std::to_string(line) + ", column " + std::to_string(col));
  }

  void skip() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  bool accept(char c) {
    skip();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string word() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < src_.size() && (std::isalpha(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  void expect_word(std::string_view w) {
    skip();
    const std::size_t start = pos_;
    if (word() != w) fail_at(start, "expected '" + std::string(w) + "'");
  }

  GaussianRational number() {
    skip();
    const std::size_t start = pos_;
    try {
      return detail::scan_gaussian(src_, pos_);
    } catch (const SyntaxError& e) {
      fail_at(e.column() - 1, "malformed number");
    } catch (const Error&) {
      fail_at(start, "malformed number");
    }
  }

  unsigned natural() {
    skip();
    const std::size_t start = pos_;
    unsigned long value = 0;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      value = value * 10 + static_cast<unsigned long>(src_[pos_] - '0');
      if (value > 1000000) fail_at(start, "order too large");
      ++pos_;
    }
    if (start == pos_) fail("expected a natural number");
    return static_cast<unsigned>(value);
  }

  Rank rank_value() {
    skip();
    const std::size_t start = pos_;
    const std::string w = word();
    if (w == "fin") return Rank::finite;
    if (w == "inf") return Rank::infinite;
    fail_at(start, "expected 'fin' or 'inf'");
  }

  // "name=" inside an argument list.
  std::string key() {
    skip();
    const std::size_t start = pos_;
    std::string k = word();
    if (k.empty() || !accept('=')) fail_at(start, "expected 'key='");
    return k;
  }

  PrimitiveBlock primitive() {
    skip();
    const std::size_t start = pos_;
    const std::string kind = word();
    if (kind == "pole") {
      expect('(');
      JordanPole p{number(), 1, Rank::infinite};
      bool seen_ord = false;
      bool seen_rank = false;
      while (accept(',')) {
        skip();
        const std::size_t at = pos_;
        const std::string k = key();
        if (k == "ord" && !seen_ord) {
          seen_ord = true;
          const std::size_t at_value = pos_;
          p.order = natural();
          if (p.order == 0) fail_at(at_value, "order must be positive");
        } else if (k == "rank" && !seen_rank) {
          seen_rank = true;
          p.rank = rank_value();
        } else {
          fail_at(at, "unexpected argument '" + k + "' for pole");
        }
      }
      expect(')');
      return p;
    }
    if (kind == "quasinil") {
      expect('(');
      QuasiNil q{number()};
      expect(')');
      return q;
    }
    if (kind == "cluster") {
      expect('(');
      ClusterDiag c;
      c.limit = number();
      expect(',');
      skip();
      std::size_t at = pos_;
      if (key() != "r") fail_at(at, "expected 'r='");
      c.scale = number();
      expect(',');
      skip();
      at = pos_;
      if (key() != "q") fail_at(at, "expected 'q='");
      const std::size_t at_ratio = pos_;
      c.ratio = number();
      if (c.scale.is_zero()) fail_at(at, "scale must be nonzero");
      if (c.ratio.is_zero() || !gq_abs_sq_lt_one(c.ratio)) fail_at(at_ratio, "ratio must satisfy 0 < |q| < 1");
      if (accept(',')) {
        skip();
        at = pos_;
        if (key() != "rank") fail_at(at, "expected 'rank='");
        c.rank_each = rank_value();
      }
      expect(')');
      return c;
    }
    fail_at(start, kind.empty() ? "expected a primitive" : "unknown primitive '" + kind + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

std::string rank_text(Rank r) { return std::string(to_string(r)); }

}  // namespace

BlockModel parse_operator_unchecked(std::string_view text) { return Parser(text).parse(); }

BlockModel parse_operator(std::string_view text, std::size_t depth) {
  BlockModel m = parse_operator_unchecked(text);
  try {
    model_profile(m, depth);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::invalid_profile) throw;
    throw Error(ErrorCode::validation_error, e.what());
  }
  return m;
}

std::string render_block(const PrimitiveBlock& b) {
  if (const auto* p = std::get_if<JordanPole>(&b)) {
    return "pole(" + p->lambda.to_string() + ", ord=" + std::to_string(p->order) + ", rank=" + rank_text(p->rank) +
           ")";
  }
  if (const auto* q = std::get_if<QuasiNil>(&b)) return "quasinil(" + q->lambda.to_string() + ")";
  const auto& c = std::get<ClusterDiag>(b);
  std::string out = "cluster(" + c.limit.to_string() + ", r=" + c.scale.to_string() + ", q=" + c.ratio.to_string();
  if (c.rank_each == Rank::infinite) out += ", rank=inf";
  return out + ")";
}

std::string render_operator(const BlockModel& m) {
  std::string out = "sum(";
  for (std::size_t k = 0; k < m.blocks.size(); ++k) {
    if (k > 0) out += ", ";
    out += render_block(m.blocks[k]);
  }
  return out + ")";
}

std::string render_profile(const SpectralProfile& p) {
  std::string out;
  for (const auto& a : p.isolated()) {
    out += a.point.to_string() + ": " + std::string(to_string(a.cls)) + " rank=" + rank_text(a.rank);
    if (a.order) out += " ord=" + std::to_string(*a.order);
    out += '\n';
  }
  for (const auto& c : p.clusters()) {
    out += "cluster " + c.limit.to_string() + " + (" + c.scale.to_string() + ")*(" + c.ratio.to_string() +
           ")^n: " + std::string(to_string(c.seq_class)) + " rank=" + rank_text(c.seq_rank) + '\n';
  }
  return out;
}

std::vector<GaussianRational> default_scalar_pool() {
  return {GaussianRational(0),  GaussianRational(1),  GaussianRational(-1),
          GaussianRational(2),  GaussianRational::parse("1/2"), GaussianRational::parse("i"),
          GaussianRational::parse("-1/2"), GaussianRational::parse("1+i")};
}

namespace {

const std::vector<GaussianRational>& ratio_pool() {
  static const std::vector<GaussianRational> pool = {
      GaussianRational::parse("1/2"), GaussianRational::parse("-1/2"), GaussianRational::parse("1/3"),
      GaussianRational::parse("1/2i")};
  return pool;
}

// Raw engine output only, so streams match across standard libraries.
std::size_t pick(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

BlockModel draw(std::mt19937_64& rng, const GenParams& p, const std::vector<GaussianRational>& pool) {
  BlockModel m;
  const std::size_t count = 1 + pick(rng, std::max(1U, p.max_blocks));
  bool cluster_used = false;
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t kind = pick(rng, p.allow_clusters && !cluster_used ? 4 : 3);
    const GaussianRational& lambda = pool[pick(rng, pool.size())];
    if (kind == 0 || kind == 1) {
      const unsigned order = 1 + static_cast<unsigned>(pick(rng, 3));
      const Rank rank = pick(rng, 2) == 0 ? Rank::finite : Rank::infinite;
      m.blocks.push_back(JordanPole{lambda, order, rank});
    } else if (kind == 2) {
      m.blocks.push_back(QuasiNil{lambda});
    } else {
      cluster_used = true;
      GaussianRational scale = pool[pick(rng, pool.size())];
      if (scale.is_zero()) scale = GaussianRational(1);
      const GaussianRational& ratio = ratio_pool()[pick(rng, ratio_pool().size())];
      const Rank rank = pick(rng, 4) == 0 ? Rank::infinite : Rank::finite;
      m.blocks.push_back(ClusterDiag{lambda, scale, ratio, rank});
    }
  }
  return m;
}

}  // namespace

BlockModel gen_random(const GenParams& p) {
  const std::vector<GaussianRational> pool = p.scalar_pool.empty() ? default_scalar_pool() : p.scalar_pool;
  std::mt19937_64 rng(p.seed);
  for (;;) {
    BlockModel m = draw(rng, p, pool);
    try {
      model_profile(m);
      return m;
    } catch (const Error&) {
      // redraw from the same stream
    }
  }
}

std::pair<BlockModel, BlockModel> gen_pair(std::uint64_t seed, unsigned max_blocks,
                                           const std::vector<GaussianRational>& pool) {
  GenParams pa{seed * 2, max_blocks, true, pool};
  BlockModel a = gen_random(pa);
  GenParams pb{seed * 2 + 1, max_blocks, !a.has_clusters(), pool};
  return {std::move(a), gen_random(pb)};
}

}  // namespace specalc

#include "specalc/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "specalc/dsl.hpp"
#include "specalc/json_report.hpp"

namespace specalc {

namespace {

struct Options {
  bool json = false;
  std::size_t depth = kDefaultCollisionDepth;
  std::string file_a;
  std::string file_b;
  std::string mode = "tensor";
  std::string lambda = "0";
  std::string conj_a;
  std::string conj_b;
  std::uint64_t seed = 0;
  unsigned max_blocks = 4;
  bool no_clusters = false;
  std::string pool;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ProductMode parse_mode(const std::string& s) {
  return s == "tensor" ? ProductMode::tensor : ProductMode::elementary;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string flags_text(const OperatorFlags& f) {
  return "nilpotent=" + yes_no(f.nilpotent) + " quasinilpotent=" + yes_no(f.quasinilpotent) +
         " algebraic=" + yes_no(f.algebraic) + " drazin_invertible=" + yes_no(f.drazin_invertible) +
         " zero_class=" + std::string(to_string(f.zero_class));
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

SpectralProfile load_profile(const std::string& path, std::size_t depth) {
  return model_profile(parse_operator(read_file(path), depth), depth);
}

int cmd_classify(const Options& o, std::ostream& out) {
  const BlockModel m = parse_operator(read_file(o.file_a), o.depth);
  const SpectralProfile p = model_profile(m, o.depth);
  const OperatorFlags f = derive_flags(p);
  const DerivedSets d = derive_sets(p);
  if (o.json) {
    print_json(out, {{"operator", render_operator(m)},
                     {"profile", to_json(p)},
                     {"flags", to_json(f)},
                     {"sets", to_json(d)}});
    return 0;
  }
  out << "operator: " << render_operator(m) << '\n' << render_profile(p);
  out << "flags: " << flags_text(f) << '\n';
  out << "spectrum: " << d.spectrum.to_string() << '\n';
  out << "poles: " << d.poles.to_string() << '\n';
  out << "iso_nonpoles: " << d.iso_nonpoles.to_string() << '\n';
  out << "accumulation: " << d.accumulation.to_string() << '\n';
  out << "bweyl: " << d.bweyl.to_string() << '\n';
  out << "weyl: " << d.weyl.to_string() << '\n';
  return 0;
}

void print_provenance(std::ostream& out, const ProductResult& r) {
  for (const auto& e : r.provenance) {
    out << (e.cluster ? "cluster " : "") << e.point.to_string() << ": " << to_string(e.cls) << " [" << e.rule
        << "]\n";
  }
}

int cmd_product(const Options& o, std::ostream& out) {
  const SpectralProfile a = load_profile(o.file_a, o.depth);
  const SpectralProfile b = load_profile(o.file_b, o.depth);
  const ProductMode mode = parse_mode(o.mode);
  const ProductResult r = product_profile_detailed(a, b, mode, o.depth);
  if (o.json) {
    print_json(out, to_json(r, mode));
    return 0;
  }
  out << "mode: " << to_string(mode) << '\n' << render_profile(r.profile) << "provenance:\n";
  print_provenance(out, r);
  return 0;
}

int cmd_transfer(const Options& o, std::ostream& out) {
  const SpectralProfile a = load_profile(o.file_a, o.depth);
  const SpectralProfile b = load_profile(o.file_b, o.depth);
  const TransferReport r = transfer_report(a, b, parse_mode(o.mode), o.depth);
  if (o.json) {
    print_json(out, to_json(r));
    return 0;
  }
  out << "mode: " << to_string(r.mode) << '\n';
  out << "scenario: " << to_string(r.scenario) << '\n';
  out << "S: " << r.s_set.to_string() << '\n';
  out << "sigma_bw(product): " << r.sigma_bw_product.to_string() << '\n';
  out << "inclusion_holds: " << yes_no(r.inclusion_holds) << '\n';
  if (!r.inclusion_holds) out << "witnesses: " << r.witnesses.to_string() << '\n';
  out << "reverse_inclusion_holds: " << yes_no(r.reverse_inclusion_holds) << '\n';
  out << "prediction: " << r.prediction.rule;
  if (r.prediction.predicted) {
    out << " predicted=" << yes_no(*r.prediction.predicted) << " applicable=" << yes_no(r.prediction.applicable)
        << " agrees=" << yes_no(*r.prediction.agrees);
  }
  out << '\n';
  out << "bweyl_delta: " << to_string(r.bweyl_delta) << '\n';
  out << "weyl_hypotheses: " << yes_no(r.weyl_hypotheses) << '\n';
  out << "weyl_identity_holds: " << yes_no(r.weyl_identity_holds) << '\n';
  out << "provenance:\n";
  print_provenance(out, r.product);
  return 0;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const BlockModel a = parse_operator(read_file(o.file_a), o.depth);
  const BlockModel b = parse_operator(read_file(o.file_b), o.depth);
  const AgreementReport r = oracle_agreement(a, b, parse_mode(o.mode), o.depth);
  if (o.json) {
    print_json(out, to_json(r));
  } else if (r.equal) {
    out << "AGREE\n";
  } else {
    out << "DISAGREE\n";
    for (const auto& d : r.diffs) out << "  " << d << '\n';
  }
  return r.equal ? 0 : 1;
}

ExactMatrix load_matrix(const std::string& path) { return parse_matrix(read_file(path)); }

Triangularized load_form(const std::string& path, const std::string& conj) {
  Triangularized t = Triangularized::upper(load_matrix(path));
  if (!conj.empty()) t.similarity = load_matrix(conj);
  return t;
}

int cmd_matrix_product(const Options& o, std::ostream& out, bool elementary) {
  const ExactMatrix a = load_matrix(o.file_a);
  const ExactMatrix b = load_matrix(o.file_b);
  const ExactMatrix m = elementary ? elementary_rep(a, b) : kron(a, b);
  if (o.json) {
    print_json(out, to_json(m));
  } else {
    out << render_matrix(m);
  }
  return 0;
}

int cmd_matrix_ascent(const Options& o, std::ostream& out) {
  const ExactMatrix m = load_matrix(o.file_a);
  const GaussianRational lambda = GaussianRational::parse(o.lambda);
  const AscentDescent ad = ascent_descent(m, lambda);
  if (o.json) {
    print_json(out, {{"lambda", to_json(lambda)},
                     {"ascent", ad.ascent},
                     {"descent", ad.descent},
                     {"pole_order", ad.pole_order}});
  } else {
    out << "lambda: " << lambda.to_string() << "\nascent: " << ad.ascent << "\ndescent: " << ad.descent
        << "\npole_order: " << ad.pole_order << '\n';
  }
  return 0;
}

int cmd_matrix_drazin(const Options& o, std::ostream& out) {
  const ExactMatrix m = load_matrix(o.file_a);
  const DrazinResult d = drazin_inverse(m);
  if (o.json) {
    print_json(out, {{"index", d.index}, {"inverse", to_json(d.inverse)}});
  } else {
    out << "index: " << d.index << '\n' << render_matrix(d.inverse);
  }
  return 0;
}

int cmd_matrix_validate(const Options& o, std::ostream& out) {
  const MatrixPairReport r =
      validate_matrix_pair(load_form(o.file_a, o.conj_a), load_form(o.file_b, o.conj_b), parse_mode(o.mode));
  if (o.json) {
    print_json(out, to_json(r));
  } else {
    out << "spectrum: {";
    for (std::size_t k = 0; k < r.product_spectrum.size(); ++k) {
      out << (k ? ", " : "") << r.product_spectrum[k].to_string();
    }
    out << "}\n";
    for (const auto& [lambda, order] : r.pole_orders) out << "pole_order " << lambda.to_string() << ": " << order << '\n';
    for (const auto& c : r.checks) {
      out << (c.passed ? "PASS " : "FAIL ") << c.name;
      if (!c.passed && !c.witness.empty()) out << ": " << c.witness;
      out << '\n';
    }
  }
  return r.ok ? 0 : 1;
}

std::vector<GaussianRational> parse_pool(const std::string& text) {
  std::vector<GaussianRational> pool;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) pool.push_back(GaussianRational::parse(item));
  return pool;
}

int cmd_gen(const Options& o, std::ostream& out) {
  GenParams p{o.seed, o.max_blocks, !o.no_clusters, o.pool.empty() ? std::vector<GaussianRational>{}
                                                                     : parse_pool(o.pool)};
  const std::string text = render_operator(gen_random(p));
  if (o.json) {
    print_json(out, {{"seed", o.seed}, {"operator", text}});
  } else {
    out << text << '\n';
  }
  return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact spectral calculus for tensor products and elementary operators", "specalc"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Emit JSON");
  app.add_option("--depth", o.depth, "Collision depth")->check(CLI::PositiveNumber);

  const auto file = CLI::ExistingFile;
  const auto modes = CLI::IsMember({"tensor", "elem", "elementary"});

  auto* classify = app.add_subcommand("classify", "Classify the spectrum of one operator");
  classify->add_option("file", o.file_a)->required()->check(file);

  auto* product = app.add_subcommand("product", "Spectral profile of a product");
  product->add_option("a", o.file_a)->required()->check(file);
  product->add_option("b", o.file_b)->required()->check(file);
  product->add_option("--mode", o.mode)->check(modes);

  auto* transfer = app.add_subcommand("transfer", "B-Weyl inclusion and transfer report");
  transfer->add_option("a", o.file_a)->required()->check(file);
  transfer->add_option("b", o.file_b)->required()->check(file);
  transfer->add_option("--mode", o.mode)->check(modes);

  auto* oracle = app.add_subcommand("oracle", "Compare the calculus with block distribution");
  oracle->add_option("a", o.file_a)->required()->check(file);
  oracle->add_option("b", o.file_b)->required()->check(file);
  oracle->add_option("--mode", o.mode)->check(modes);

  auto* matrix = app.add_subcommand("matrix", "Exact finite-dimensional checks");
  matrix->require_subcommand(1);
  auto* mkron = matrix->add_subcommand("kron", "Kronecker product a ⊗ b");
  auto* melem = matrix->add_subcommand("elem", "Matrix of U -> aUb");
  for (auto* sub : {mkron, melem}) {
    sub->add_option("a", o.file_a)->required()->check(file);
    sub->add_option("b", o.file_b)->required()->check(file);
  }
  auto* mascent = matrix->add_subcommand("ascent", "Ascent and descent of m - lambda");
  mascent->add_option("m", o.file_a)->required()->check(file);
  mascent->add_option("--lambda", o.lambda);
  auto* mdrazin = matrix->add_subcommand("drazin", "Drazin inverse");
  mdrazin->add_option("m", o.file_a)->required()->check(file);
  auto* mvalidate = matrix->add_subcommand("validate", "Check a triangular pair");
  mvalidate->add_option("a", o.file_a)->required()->check(file);
  mvalidate->add_option("b", o.file_b)->required()->check(file);
  mvalidate->add_option("--conj-a", o.conj_a, "Similarity P with a = P T P^-1")->check(file);
  mvalidate->add_option("--conj-b", o.conj_b, "Similarity for b")->check(file);
  mvalidate->add_option("--mode", o.mode)->check(modes);

  auto* gen = app.add_subcommand("gen", "Seeded random operator");
  gen->add_option("--seed", o.seed)->required();
  gen->add_option("--max-blocks", o.max_blocks)->check(CLI::Range(1U, 16U));
  gen->add_flag("--no-clusters", o.no_clusters);
  gen->add_option("--pool", o.pool, "Comma-separated scalars");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (classify->parsed()) return cmd_classify(o, out);
    if (product->parsed()) return cmd_product(o, out);
    if (transfer->parsed()) return cmd_transfer(o, out);
    if (oracle->parsed()) return cmd_oracle(o, out);
    if (mkron->parsed()) return cmd_matrix_product(o, out, false);
    if (melem->parsed()) return cmd_matrix_product(o, out, true);
    if (mascent->parsed()) return cmd_matrix_ascent(o, out);
    if (mdrazin->parsed()) return cmd_matrix_drazin(o, out);
    if (mvalidate->parsed()) return cmd_matrix_validate(o, out);
    if (gen->parsed()) return cmd_gen(o, out);
  } catch (const Error& e) {
    if (o.json) {
      print_json(out, error_json(e));
    } else {
      err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    }
    return 1;
  } catch (const std::invalid_argument& e) {
    if (o.json) {
      print_json(out, {{"error", "invalid_argument"}, {"message", e.what()}});
    } else {
      err << "error: invalid_argument: " << e.what() << '\n';
    }
    return 1;
  }
  err << "usage error: no command\n";
  return 2;
}

}  // namespace specalc

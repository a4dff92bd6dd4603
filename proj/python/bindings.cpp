#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "specalc/dsl.hpp"
#include "specalc/json_report.hpp"

namespace py = pybind11;
using namespace specalc;

namespace {

ProductMode mode_of(const std::string& s) {
  if (s == "tensor") return ProductMode::tensor;
  if (s == "elem" || s == "elementary") return ProductMode::elementary;
  throw py::value_error("mode must be 'tensor' or 'elementary'");
}

SpectralProfile profile_of(const std::string& text, std::size_t depth) {
  return model_profile(parse_operator(text, depth), depth);
}

ExactMatrix matrix_of(const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) throw py::value_error("empty matrix");
  ExactMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw py::value_error("ragged matrix");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = GaussianRational::parse(rows[i][j]);
  }
  return m;
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_specalc, m) {
  m.doc() = "Exact spectral calculus for tensor products and elementary operators";

  static py::exception<Error> error(m, "SpecalcError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, (std::string(to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  m.def("canonical", [](const std::string& text) { return render_operator(parse_operator(text)); },
        py::arg("text"));
  m.def(
      "classify",
      [](const std::string& text, std::size_t depth) {
        const SpectralProfile p = profile_of(text, depth);
        return dump({{"profile", to_json(p)}, {"flags", to_json(derive_flags(p))}, {"sets", to_json(derive_sets(p))}});
      },
      py::arg("text"), py::arg("depth") = kDefaultCollisionDepth);
  m.def(
      "product",
      [](const std::string& a, const std::string& b, const std::string& mode, std::size_t depth) {
        const ProductMode md = mode_of(mode);
        return dump(to_json(product_profile_detailed(profile_of(a, depth), profile_of(b, depth), md, depth), md));
      },
      py::arg("a"), py::arg("b"), py::arg("mode") = "tensor", py::arg("depth") = kDefaultCollisionDepth);
  m.def(
      "transfer",
      [](const std::string& a, const std::string& b, const std::string& mode, std::size_t depth) {
        return dump(to_json(transfer_report(profile_of(a, depth), profile_of(b, depth), mode_of(mode), depth)));
      },
      py::arg("a"), py::arg("b"), py::arg("mode") = "tensor", py::arg("depth") = kDefaultCollisionDepth);
  m.def(
      "oracle",
      [](const std::string& a, const std::string& b, const std::string& mode, std::size_t depth) {
        return dump(to_json(oracle_agreement(parse_operator(a, depth), parse_operator(b, depth), mode_of(mode), depth)));
      },
      py::arg("a"), py::arg("b"), py::arg("mode") = "tensor", py::arg("depth") = kDefaultCollisionDepth);
  m.def(
      "gen",
      [](std::uint64_t seed, unsigned max_blocks, bool allow_clusters) {
        return render_operator(gen_random(GenParams{seed, max_blocks, allow_clusters, {}}));
      },
      py::arg("seed"), py::arg("max_blocks") = 4, py::arg("allow_clusters") = true);

  m.def(
      "kron", [](const std::vector<std::vector<std::string>>& a, const std::vector<std::vector<std::string>>& b) {
        return dump(to_json(kron(matrix_of(a), matrix_of(b))));
      });
  m.def(
      "elementary_rep",
      [](const std::vector<std::vector<std::string>>& a, const std::vector<std::vector<std::string>>& b) {
        return dump(to_json(elementary_rep(matrix_of(a), matrix_of(b))));
      });
  m.def(
      "ascent_descent",
      [](const std::vector<std::vector<std::string>>& a, const std::string& lambda) {
        const AscentDescent ad = ascent_descent(matrix_of(a), GaussianRational::parse(lambda));
        return dump({{"ascent", ad.ascent}, {"descent", ad.descent}, {"pole_order", ad.pole_order}});
      },
      py::arg("m"), py::arg("lambda_") = "0");
  m.def("drazin", [](const std::vector<std::vector<std::string>>& a) {
    const DrazinResult d = drazin_inverse(matrix_of(a));
    return dump({{"index", d.index}, {"inverse", to_json(d.inverse)}});
  });
}

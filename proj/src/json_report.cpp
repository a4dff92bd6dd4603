#include "specalc/json_report.hpp"

namespace specalc {

namespace {

std::string str(std::string_view s) { return std::string(s); }

Json points_json(const std::vector<GaussianRational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

}  // namespace

Json to_json(const GaussianRational& x) { return x.to_string(); }

Json to_json(const PointSet& s) {
  Json j;
  j["points"] = Json::array();
  for (const auto& p : s.points()) j["points"].push_back(to_json(p));
  j["families"] = Json::array();
  for (const auto& f : s.families()) {
    j["families"].push_back({{"limit", to_json(f.limit)}, {"scale", to_json(f.scale)}, {"ratio", to_json(f.ratio)}});
  }
  return j;
}

Json to_json(const SpectralProfile& p) {
  Json j;
  j["isolated"] = Json::array();
  for (const auto& a : p.isolated()) {
    Json e{{"point", to_json(a.point)}, {"class", str(to_string(a.cls))}, {"rank", str(to_string(a.rank))}};
    e["order"] = a.order ? Json(*a.order) : Json(nullptr);
    j["isolated"].push_back(std::move(e));
  }
  j["clusters"] = Json::array();
  for (const auto& c : p.clusters()) {
    j["clusters"].push_back({{"limit", to_json(c.limit)},
                             {"scale", to_json(c.scale)},
                             {"ratio", to_json(c.ratio)},
                             {"class", str(to_string(c.seq_class))},
                             {"rank", str(to_string(c.seq_rank))}});
  }
  return j;
}

Json to_json(const OperatorFlags& f) {
  return {{"nilpotent", f.nilpotent},
          {"quasinilpotent", f.quasinilpotent},
          {"algebraic", f.algebraic},
          {"drazin_invertible", f.drazin_invertible},
          {"zero_in_spectrum", f.zero_in_spectrum},
          {"zero_class", str(to_string(f.zero_class))}};
}

Json to_json(const DerivedSets& d) {
  return {{"spectrum", to_json(d.spectrum)},
          {"isolated", to_json(d.isolated)},
          {"accumulation", to_json(d.accumulation)},
          {"poles", to_json(d.poles)},
          {"finite_rank_poles", to_json(d.finite_rank_poles)},
          {"iso_nonpoles", to_json(d.iso_nonpoles)},
          {"drazin", to_json(d.drazin)},
          {"bweyl", to_json(d.bweyl)},
          {"weyl", to_json(d.weyl)}};
}

Json to_json(const ProductResult& r, ProductMode mode) {
  Json j;
  j["mode"] = str(to_string(mode));
  j["profile"] = to_json(r.profile);
  j["provenance"] = Json::array();
  for (const auto& e : r.provenance) {
    j["provenance"].push_back({{"point", to_json(e.point)},
                               {"cluster", e.cluster},
                               {"class", str(to_string(e.cls))},
                               {"rule", e.rule}});
  }
  return j;
}

Json to_json(const TransferReport& r) {
  Json j;
  j["mode"] = str(to_string(r.mode));
  j["scenario"] = str(to_string(r.scenario));
  j["flags_a"] = to_json(r.flags_a);
  j["flags_b"] = to_json(r.flags_b);
  j["flags_product"] = to_json(r.flags_product);
  j["product"] = to_json(r.product, r.mode);
  j["s_set"] = to_json(r.s_set);
  j["sigma_bw_product"] = to_json(r.sigma_bw_product);
  j["inclusion_holds"] = r.inclusion_holds;
  j["witnesses"] = to_json(r.witnesses);
  j["reverse_inclusion_holds"] = r.reverse_inclusion_holds;
  Json pred;
  pred["rule"] = str(r.prediction.rule);
  pred["predicted"] = r.prediction.predicted ? Json(*r.prediction.predicted) : Json(nullptr);
  pred["applicable"] = r.prediction.applicable;
  pred["agrees"] = r.prediction.agrees ? Json(*r.prediction.agrees) : Json(nullptr);
  j["prediction"] = std::move(pred);
  j["bweyl_delta"] = str(to_string(r.bweyl_delta));
  j["weyl_hypotheses"] = r.weyl_hypotheses;
  j["bweyl_equals_s"] = r.bweyl_equals_s;
  j["sigma_w_product"] = to_json(r.sigma_w_product);
  j["weyl_product"] = to_json(r.weyl_product);
  j["weyl_identity_holds"] = r.weyl_identity_holds;
  return j;
}

Json to_json(const AgreementReport& r) {
  Json j;
  j["agree"] = r.equal;
  j["oracle"] = to_json(r.oracle);
  j["calculus"] = to_json(r.calculus);
  j["diffs"] = r.diffs;
  return j;
}

Json to_json(const ExactMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Json to_json(const MatrixPairReport& r) {
  Json j;
  j["ok"] = r.ok;
  j["product_spectrum"] = points_json(r.product_spectrum);
  j["pole_orders"] = Json::array();
  for (const auto& [lambda, order] : r.pole_orders) {
    j["pole_orders"].push_back({{"point", to_json(lambda)}, {"order", order}});
  }
  j["checks"] = Json::array();
  for (const auto& c : r.checks) {
    j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}});
  }
  return j;
}

Json error_json(const Error& e) {
  Json j{{"error", str(to_string(e.code()))}, {"message", e.what()}};
  if (const auto* s = dynamic_cast<const SyntaxError*>(&e)) {
    j["line"] = s->line();
    j["column"] = s->column();
  }
  return j;
}

}  // namespace specalc

#include "rainbowlab/report.hpp"

#include <cstdio>

namespace rainbowlab::report {

Json artifact_header(const Json& config, u64 seed) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["seed"] = seed;
  j["config"] = config;
  return j;
}

Json to_json(const Coloring& c, u64 k) {
  Json j;
  j["n"] = c.size();
  j["k"] = k;
  j["colors"] = Json::array();
  for (Color col : c.colors()) j["colors"].push_back(col);
  return j;
}

Json to_json(const RainbowCertificate& cert) { return Json{{"x", cert.x}, {"y", cert.y}, {"z", cert.z}}; }

Json to_json(const StructuralReport& rep) {
  Json j;
  j["zero_singleton"] = rep.zero_singleton;
  j["components_monochromatic"] = rep.components_monochromatic;
  j["negation_symmetric"] = rep.negation_symmetric;
  j["overall"] = rep.overall;
  j["counterexamples"] = Json::array();
  for (const auto& ce : rep.counterexamples) {
    j["counterexamples"].push_back(Json{{"condition", to_string(ce.condition)}, {"residues", ce.residues}});
  }
  return j;
}

Json to_json(const RbResult& res) {
  Json j;
  j["n"] = res.n;
  j["k"] = res.k;
  j["rb"] = res.rb ? Json(*res.rb) : Json(nullptr);
  j["predicted"] = res.predicted ? Json(*res.predicted) : Json(nullptr);
  j["max_r"] = res.max_r;
  const Coloring* w = res.last_witness();
  j["witness"] = w ? to_json(*w, res.k) : Json(nullptr);
  j["nodes_explored"] = res.nodes_explored();
  j["budget_exceeded"] = res.budget_exceeded();
  j["evidence"] = Json::array();
  for (const auto& ev : res.evidence) {
    Json e;
    e["r"] = ev.r;
    e["verdict"] = to_string(ev.verdict);
    e["nodes"] = ev.nodes;
    if (ev.witness) e["witness_colors"] = std::vector<unsigned>(ev.witness->colors().begin(), ev.witness->colors().end());
    j["evidence"].push_back(std::move(e));
  }
  return j;
}

namespace {

std::string rational_text(const Rational& q) {
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

}  // namespace

Json to_json(const DensityExperimentReport& rep) {
  Json j;
  j["k"] = rep.config.k;
  j["N"] = rep.config.N;
  j["trials"] = rep.config.trials;
  j["margin"] = rep.config.margin;
  j["threshold"] = rational_text(rep.threshold);
  j["min_class_count"] = rep.min_class_count;
  j["generator_feasible"] = rep.generator_feasible;
  if (!rep.generator_note.empty()) j["generator_note"] = rep.generator_note;
  j["with_rainbow"] = rep.with_rainbow;
  j["without_rainbow"] = rep.without_rainbow;
  j["exceptions"] = rep.exceptions;
  return j;
}

Coloring coloring_from_json(const Json& j) {
  if (!j.contains("colors") || !j["colors"].is_array()) throw DomainError("coloring JSON needs a \"colors\" array");
  std::vector<Color> colors;
  unsigned max_color = 0;
  for (const auto& v : j["colors"]) {
    if (!v.is_number_unsigned() || v.get<unsigned>() >= kMaxColors) throw DomainError("coloring JSON: bad color id");
    colors.push_back(static_cast<Color>(v.get<unsigned>()));
    max_color = std::max<unsigned>(max_color, colors.back());
  }
  if (j.contains("n") && j["n"].get<std::size_t>() != colors.size()) {
    throw DomainError("coloring JSON: n does not match the number of colors");
  }
  const unsigned r = j.contains("r") ? j["r"].get<unsigned>() : max_color + 1;
  return Coloring(std::move(colors), r);
}

Json digraph_summary(const PowerDigraph& g) {
  Json j;
  j["n"] = g.n();
  j["k"] = g.k();
  j["component_count"] = g.component_count();
  j["cycle_vertex_count"] = cycle_vertices(g).size();
  j["components"] = g.components();
  Json th;
  if (g.n() >= 3 && is_prime(g.n())) {
    const auto td = t_decomposition(g.n() - 1, g.k());
    const auto pred = component_prediction(g.n(), g.k());
    th["scope"] = "prime";
    th["t"] = td.t;
    th["w"] = td.w;
    th["predicted_cycle_vertex_count"] = td.t + 1;
    th["component_prediction"] = to_string(pred.kind);
    th["reason"] = pred.reason;
  } else {
    th["scope"] = "out-of-scope";
    th["reason"] = "theorems are stated for odd prime moduli";
  }
  j["theorem"] = std::move(th);
  return j;
}

std::string rb_csv_header() { return "p,k,predicted,brute,agree,nodes,ms\n"; }

std::string rb_agreement(const RbResult& res) {
  if (!res.rb) {
    if (res.budget_exceeded()) return "exceeded";
    // rb > max_r contradicts any prediction within range.
    return res.predicted && *res.predicted <= res.max_r ? "no" : "n/a";
  }
  if (!res.predicted) return "n/a";
  return *res.predicted == *res.rb ? "yes" : "no";
}

std::string rb_csv_row(const RbResult& res, double wall_ms) {
  char ms[32];
  std::snprintf(ms, sizeof ms, "%.1f", wall_ms);
  std::string brute = res.rb ? std::to_string(*res.rb) : (res.budget_exceeded() ? "exceeded" : ">" + std::to_string(res.max_r));
  return std::to_string(res.n) + "," + std::to_string(res.k) + "," +
         (res.predicted ? std::to_string(*res.predicted) : std::string()) + "," + brute + "," + rb_agreement(res) +
         "," + std::to_string(res.nodes_explored()) + "," + ms + "\n";
}

}  // namespace rainbowlab::report

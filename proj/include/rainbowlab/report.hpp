#pragma once

#include <string>

#include <json.hpp>

#include "rainbowlab/classifier.hpp"
#include "rainbowlab/nat_prefix.hpp"
#include "rainbowlab/rainbow_search.hpp"

namespace rainbowlab::report {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolName = "rainbowlab";
inline constexpr const char* kToolVersion = "0.1.0";

// {"schema", "tool", "version", "seed", "config"}; every artifact starts with it.
Json artifact_header(const Json& config, u64 seed);

Json to_json(const Coloring& c, u64 k);
Json to_json(const RainbowCertificate& cert);
Json to_json(const StructuralReport& rep);
Json to_json(const RbResult& res);
Json to_json(const DensityExperimentReport& rep);

// {"n", "k", "colors"}; r defaults to 1 + the largest color id.
Coloring coloring_from_json(const Json& j);

Json digraph_summary(const PowerDigraph& g);

// Columns: p,k,predicted,brute,agree,nodes,ms.
std::string rb_csv_header();
std::string rb_csv_row(const RbResult& res, double wall_ms);

// "agree" column: "yes", "no", or "n/a" without a prediction, "exceeded" when the budget ran out.
std::string rb_agreement(const RbResult& res);

}  // namespace rainbowlab::report

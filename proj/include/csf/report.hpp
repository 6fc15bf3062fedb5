#pragma once

#include <chrono>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "csf/graph.hpp"
#include "csf/positivity.hpp"
#include "csf/symfunc.hpp"

namespace csf {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchemaVersion = "1";

Json partition_to_json(const Partition& p);
/// Accepts a JSON array of descending positive integers.
Partition partition_from_json(const Json& j);

/// Exact coefficient as a JSON integer. Throws OverflowError beyond 64 bits.
Json coefficient_to_json(Integer c);

/// {"vertices": N, "edges": [[a, b], ...]}
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

/// [{"lambda": [...], "coeff": c}, ...] in the polynomial's term order.
Json terms_to_json(const SymPoly& f);
Json terms_to_json(const std::vector<Term>& terms);

/// {"nu", "vertices", "schur", "negative", "schur_positive"}
Json report_to_json(const PositivityReport& r);

/// {"schema_version", "n", "reports", "verdict"}
Json theorem_to_json(const TheoremRun& run);

/// Wall-clock seconds per named phase, kept in the order phases finish.
class PhaseTimer {
public:
    void start(std::string name);
    void stop();
    Json to_json() const;

private:
    std::string current_;
    std::chrono::steady_clock::time_point began_;
    std::vector<std::pair<std::string, double>> phases_;
};

/// Top-level document printed on stdout by every command.
Json report_document(std::string_view command, Json inputs, Json results, const PhaseTimer& timing);

/// Stable text form used for every emitted document.
std::string dump_json(const Json& j);

}  // namespace csf

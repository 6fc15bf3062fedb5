#include "csf/report.hpp"

#include <stdexcept>

namespace csf {

Json partition_to_json(const Partition& p) {
    Json out = Json::array();
    for (int part : p.parts()) {
        out.push_back(part);
    }
    return out;
}

Partition partition_from_json(const Json& j) {
    if (!j.is_array()) {
        throw std::invalid_argument("partition must be a JSON array");
    }
    std::vector<int> parts;
    for (const auto& v : j) {
        if (!v.is_number_integer()) {
            throw std::invalid_argument("partition parts must be integers");
        }
        parts.push_back(v.get<int>());
    }
    return Partition(std::move(parts));
}

Json coefficient_to_json(Integer c) {
    return c.to_int64();
}

Json graph_to_json(const Graph& g) {
    Json edges = Json::array();
    for (const auto& [a, b] : g.edges()) {
        edges.push_back(Json::array({a, b}));
    }
    Json out;
    out["vertices"] = g.vertex_count();
    out["edges"] = std::move(edges);
    return out;
}

Graph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
        throw std::invalid_argument("graph JSON needs \"vertices\" and \"edges\"");
    }
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) {
            throw std::invalid_argument("each edge must be a pair of vertices");
        }
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph(j.at("vertices").get<int>(), std::move(edges));
}

Json terms_to_json(const SymPoly& f) {
    Json out = Json::array();
    for (const auto& [lam, c] : f.terms()) {
        Json term;
        term["lambda"] = partition_to_json(lam);
        term["coeff"] = coefficient_to_json(c);
        out.push_back(std::move(term));
    }
    return out;
}

Json terms_to_json(const std::vector<Term>& terms) {
    Json out = Json::array();
    for (const auto& [lam, c] : terms) {
        Json term;
        term["lambda"] = partition_to_json(lam);
        term["coeff"] = coefficient_to_json(c);
        out.push_back(std::move(term));
    }
    return out;
}

Json report_to_json(const PositivityReport& r) {
    Json out;
    out["nu"] = partition_to_json(r.nu);
    out["vertices"] = r.graph.vertex_count();
    out["schur"] = terms_to_json(r.schur);
    out["negative"] = terms_to_json(r.negative);
    out["schur_positive"] = r.schur_positive;
    return out;
}

Json theorem_to_json(const TheoremRun& run) {
    Json reports = Json::array();
    for (const auto& r : run.reports) {
        reports.push_back(report_to_json(r));
    }
    Json out;
    out["schema_version"] = kSchemaVersion;
    out["n"] = run.n;
    out["reports"] = std::move(reports);
    out["verdict"] = verdict_name(run.verdict);
    return out;
}

void PhaseTimer::start(std::string name) {
    stop();
    current_ = std::move(name);
    began_ = std::chrono::steady_clock::now();
}

void PhaseTimer::stop() {
    if (current_.empty()) {
        return;
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - began_;
    phases_.emplace_back(std::move(current_), elapsed.count());
    current_.clear();
}

Json PhaseTimer::to_json() const {
    Json out = Json::object();
    for (const auto& [name, seconds] : phases_) {
        out[name] = seconds;
    }
    return out;
}

Json report_document(std::string_view command, Json inputs, Json results, const PhaseTimer& timing) {
    Json out;
    out["schema_version"] = kSchemaVersion;
    out["command"] = command;
    out["inputs"] = std::move(inputs);
    out["results"] = std::move(results);
    out["timing"] = timing.to_json();
    return out;
}

std::string dump_json(const Json& j) {
    return j.dump(2) + "\n";
}

}  // namespace csf

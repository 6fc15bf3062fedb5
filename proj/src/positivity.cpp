#include "csf/positivity.hpp"

#include <algorithm>
#include <string>

namespace csf {

bool is_schur_positive(const SymPoly& f) {
    return std::none_of(f.terms().begin(), f.terms().end(), [](const auto& term) { return term.second.sign() < 0; });
}

std::optional<ScreenCertificate> dominance_screen(const Graph& g) {
    const PartitionSet types = stable_partition_types(g);
    const auto all = partitions_of(g.vertex_count());
    for (const Partition& achieved : all) {
        if (!types.contains(achieved)) {
            continue;
        }
        for (const Partition& candidate : all) {
            if (candidate != achieved && !types.contains(candidate) && dominates(achieved, candidate)) {
                return ScreenCertificate{achieved, candidate};
            }
        }
    }
    return std::nullopt;
}

bool hub_leaf_reduction_check(const Graph& g, int hub) {
    if (hub < 0 || hub >= g.vertex_count()) {
        throw std::invalid_argument("hub_leaf_reduction_check: hub " + std::to_string(hub) + " is not a vertex");
    }
    if (!g.is_tree()) {
        throw std::invalid_argument("hub_leaf_reduction_check: graph is not a tree");
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (v != hub && !g.adjacent(v, hub) && g.degree(v) != 1) {
            return false;
        }
    }
    return true;
}

std::vector<std::pair<Partition, Graph>> candidate_trees(int n) {
    if (n < 1) {
        throw std::invalid_argument("candidate_trees: n must be positive");
    }
    std::vector<std::pair<Partition, Graph>> out;
    for (Partition& nu : partitions_of(n - 1)) {
        Graph tree = spider(nu);
        out.emplace_back(std::move(nu), std::move(tree));
    }
    return out;
}

PositivityReport positivity_report(const Partition& nu, const Graph& g, const CharacterTable& table) {
    PositivityReport report{nu, g, csf_schur(g, table), {}, true};
    report.negative = negative_schur_coefficients(report.schur);
    report.schur_positive = report.negative.empty();
    return report;
}

std::string_view verdict_name(Verdict v) {
    return v == Verdict::verified ? "VERIFIED" : "COUNTEREXAMPLE-ABSENT";
}

TheoremRun verify_theorem(int n, const CharacterTable& table, const ProgressSink& progress) {
    if (table.degree() != 2 * n) {
        throw std::invalid_argument("verify_theorem: character table has degree " + std::to_string(table.degree()) +
                                    ", need " + std::to_string(2 * n));
    }
    auto say = [&](std::string_view msg) {
        if (progress) {
            progress(msg);
        }
    };
    if (n >= kLargeTheoremDegree) {
        say("warning: n = " + std::to_string(n) + " enumerates 2^" + std::to_string(2 * n - 1) +
            " edge subsets per candidate tree");
    }
    TheoremRun run;
    run.n = n;
    const auto candidates = candidate_trees(n);
    for (const auto& [nu, tree] : candidates) {
        run.reports.push_back(positivity_report(nu, tree, table));
        const auto& r = run.reports.back();
        say("nu=" + nu.to_string() + " negative=" + std::to_string(r.negative.size()) +
            (r.schur_positive ? " schur-positive" : " not schur-positive"));
    }
    const bool any_positive = std::any_of(run.reports.begin(), run.reports.end(),
                                          [](const PositivityReport& r) { return r.schur_positive; });
    run.verdict = any_positive ? Verdict::counterexample_absent : Verdict::verified;
    return run;
}

}  // namespace csf

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "csf/chromatic.hpp"
#include "csf/graph.hpp"
#include "csf/symfunc.hpp"

namespace csf {

/// Witness that X_G is not Schur positive: G has a stable partition of type
/// `achieved` but none of the dominated type `missing`.
struct ScreenCertificate {
    Partition achieved;
    Partition missing;

    friend bool operator==(const ScreenCertificate&, const ScreenCertificate&) = default;
};

struct PositivityReport {
    Partition nu;
    Graph graph;
    SymPoly schur{Basis::schur, 0};
    std::vector<Term> negative;
    bool schur_positive = true;
};

/// No stored coefficient is negative. The zero function qualifies.
bool is_schur_positive(const SymPoly& f);

/// First (achieved, missing) pair in partition order violating dominance
/// closure of the stable-partition types, if any.
std::optional<ScreenCertificate> dominance_screen(const Graph& g);

/// True iff every vertex that is neither `hub` nor adjacent to it is a leaf.
/// Throws std::invalid_argument if g is not a tree or hub is out of range.
bool hub_leaf_reduction_check(const Graph& g, int hub);

/// (nu, T(nu)) for every nu of n - 1, in partition order.
std::vector<std::pair<Partition, Graph>> candidate_trees(int n);

PositivityReport positivity_report(const Partition& nu, const Graph& g, const CharacterTable& table);

enum class Verdict { verified, counterexample_absent };

std::string_view verdict_name(Verdict v);

/// Trees on more vertices than this trigger a resource warning.
inline constexpr int kLargeTheoremDegree = 11;

struct TheoremRun {
    int n = 0;
    std::vector<PositivityReport> reports;
    Verdict verdict = Verdict::verified;
};

using ProgressSink = std::function<void(std::string_view)>;

/// Expands X_{T(nu)} in the Schur basis for every candidate tree with hub
/// degree n. The table must have degree 2n. VERIFIED means no candidate is
/// Schur positive.
TheoremRun verify_theorem(int n, const CharacterTable& table, const ProgressSink& progress = {});

}  // namespace csf

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails. Every comparison is exact.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "csf/chartable_cache.hpp"
#include "csf/positivity.hpp"
#include "csf/report.hpp"
#include "oracles.hpp"

namespace {

using csf::Graph;
using csf::Integer;
using csf::Partition;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            if (pass) {
                detail << what;
            }
            pass = false;
        }
    }
};

int failures = 0;

void report(int id, const std::string& title, const std::function<void(Outcome&)>& body) {
    const auto began = std::chrono::steady_clock::now();
    Outcome out;
    try {
        body(out);
    } catch (const std::exception& e) {
        out.pass = false;
        out.detail << "exception: " << e.what();
    }
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - began;
    std::printf("[%s] C%-2d %s (%.1fs)%s%s\n", out.pass ? "PASS" : "FAIL", id, title.c_str(), took.count(),
                out.detail.str().empty() ? "" : " :: ", out.detail.str().c_str());
    std::fflush(stdout);
    failures += out.pass ? 0 : 1;
}

std::set<std::string> as_strings(const std::vector<Partition>& ps) {
    std::set<std::string> out;
    for (const auto& p : ps) {
        out.insert(p.to_string());
    }
    return out;
}

std::vector<Graph> small_corpus() {
    std::vector<Graph> g;
    for (int v = 1; v <= 7; ++v) {
        g.push_back(csf::path_graph(v));
    }
    for (int leaves = 2; leaves <= 6; ++leaves) {
        g.push_back(csf::star_graph(leaves));
    }
    for (int v = 3; v <= 7; ++v) {
        g.push_back(csf::cycle_graph(v));
    }
    for (int k = 0; k <= 2; ++k) {
        for (const auto& nu : csf::partitions_of(k)) {
            g.push_back(csf::spider(nu));
        }
    }
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        g.push_back(oracle::random_tree(5 + static_cast<int>(seed % 3), 100 + seed));
    }
    g.push_back(csf::complete_graph(4));
    g.push_back(Graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}}));
    return g;
}

std::vector<Graph> screen_corpus() {
    std::vector<Graph> g = small_corpus();
    for (int v = 8; v <= 10; ++v) {
        g.push_back(csf::path_graph(v));
        g.push_back(csf::star_graph(v - 1));
        g.push_back(csf::cycle_graph(v));
    }
    for (int k = 3; k <= 4; ++k) {
        for (const auto& nu : csf::partitions_of(k)) {
            g.push_back(csf::spider(nu));
        }
    }
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        g.push_back(oracle::random_tree(8 + static_cast<int>(seed % 3), 500 + seed));
    }
    return g;
}

}  // namespace

int main() {
    std::printf("building character table for n = 20\n");
    const auto t0 = std::chrono::steady_clock::now();
    csf::CharacterTable table20(20);
    table20.build();
    const std::chrono::duration<double> built = std::chrono::steady_clock::now() - t0;
    std::printf("  %zu classes in %.1fs\n", table20.partitions().size(), built.count());

    csf::TheoremRun run;
    std::string first_dump;

    report(1, "verify n=10: all 30 spiders fail Schur positivity, verdict VERIFIED", [&](Outcome& o) {
        run = csf::verify_theorem(10, table20);
        first_dump = csf::dump_json(csf::theorem_to_json(run));
        o.expect(run.reports.size() == 30, "expected 30 reports");
        for (const auto& r : run.reports) {
            o.expect(!r.schur_positive, "nu=" + r.nu.to_string() + " is Schur positive");
            o.expect(r.graph.vertex_count() == 20, "wrong vertex count");
        }
        o.expect(run.verdict == csf::Verdict::verified, "verdict is not VERIFIED");
    });

    report(2, "dichotomy: s(9,9,2) < 0 when nu_1 >= 6, s(3,3,2^7) < 0 when nu_1 <= 5", [&](Outcome& o) {
        const Partition high{9, 9, 2};
        const Partition low{3, 3, 2, 2, 2, 2, 2, 2, 2};
        o.expect(run.reports.size() == 30, "criterion 1 did not produce reports");
        for (const auto& r : run.reports) {
            const Partition& key = r.nu[0] >= 6 ? high : low;
            o.expect(r.schur.coeff(key).sign() < 0,
                     "nu=" + r.nu.to_string() + " coefficient of s(" + key.to_string() + ") is " +
                         r.schur.coeff(key).to_string());
        }
    });

    report(3, "extremal negative counts: min 4 at {621,6111,54}, max 30 at {22221,222111,1^9}", [&](Outcome& o) {
        o.expect(run.reports.size() == 30, "criterion 1 did not produce reports");
        std::size_t lo = SIZE_MAX;
        std::size_t hi = 0;
        for (const auto& r : run.reports) {
            lo = std::min(lo, r.negative.size());
            hi = std::max(hi, r.negative.size());
        }
        std::vector<Partition> at_lo;
        std::vector<Partition> at_hi;
        for (const auto& r : run.reports) {
            if (r.negative.size() == lo) {
                at_lo.push_back(r.nu);
            }
            if (r.negative.size() == hi) {
                at_hi.push_back(r.nu);
            }
        }
        o.expect(lo == 4, "minimum is " + std::to_string(lo));
        o.expect(hi == 30, "maximum is " + std::to_string(hi));
        o.expect(as_strings(at_lo) == std::set<std::string>{"6,2,1", "6,1,1,1", "5,4"}, "wrong minimizers");
        o.expect(as_strings(at_hi) == std::set<std::string>{"2,2,2,2,1", "2,2,2,1,1,1", "1,1,1,1,1,1,1,1,1"},
                 "wrong maximizers");
    });

    report(4, "verify n=2: the single candidate P4 is Schur positive", [&](Outcome& o) {
        csf::CharacterTable table4(4);
        const auto small = csf::verify_theorem(2, table4);
        o.expect(small.reports.size() == 1, "expected one candidate");
        const Graph& p4 = small.reports.front().graph;
        int max_degree = 0;
        for (int v = 0; v < p4.vertex_count(); ++v) {
            max_degree = std::max(max_degree, p4.degree(v));
        }
        o.expect(p4.vertex_count() == 4 && p4.is_tree() && max_degree == 2, "candidate is not a path on 4 vertices");
        o.expect(small.reports.front().schur_positive, "P4 reported not Schur positive");
        o.expect(small.verdict == csf::Verdict::counterexample_absent, "verdict should report the witness");
    });

    report(5, "oracle equivalence: Kostka image of the Schur expansion equals coloring counts", [&](Outcome& o) {
        const auto corpus = small_corpus();
        o.expect(corpus.size() >= 20, "corpus too small");
        for (const auto& g : corpus) {
            o.expect(g.vertex_count() <= 7, "corpus graph too large");
            csf::CharacterTable table(g.vertex_count());
            const auto lhs = csf::s_to_m(csf::csf_schur(g, table));
            const auto rhs = csf::coloring_monomial_expansion(g, g.vertex_count());
            o.expect(lhs == rhs, "mismatch on a graph with " + std::to_string(g.vertex_count()) + " vertices");
        }
    });

    report(6, "evaluation identity: sum c_lam s_lam(1^k) = k(k-1)^19 for k = 2, 3, 4", [&](Outcome& o) {
        o.expect(run.reports.size() == 30, "criterion 1 did not produce reports");
        for (const auto& r : run.reports) {
            for (int k = 2; k <= 4; ++k) {
                Integer total = 0;
                for (const auto& [lam, c] : r.schur.terms()) {
                    total += c * csf::schur_principal_evaluation(lam, k);
                }
                Integer expected = k;
                for (int i = 0; i < 19; ++i) {
                    expected *= k - 1;
                }
                o.expect(total == expected, "nu=" + r.nu.to_string() + " k=" + std::to_string(k) + " gives " +
                                                total.to_string());
            }
        }
    });

    report(7, "character tables: dimensions and orthogonality n<=8, 50 random n=20 entries", [&](Outcome& o) {
        for (int n = 1; n <= 8; ++n) {
            csf::CharacterTable table(n);
            table.build();
            for (const auto& lam : table.partitions()) {
                o.expect(table.at(lam, Partition::ones(n)) == oracle::hook_formula(lam), "dimension mismatch");
            }
            for (const auto& mu : table.partitions()) {
                Integer squares = 0;
                for (const auto& lam : table.partitions()) {
                    squares += table.at(lam, mu) * table.at(lam, mu);
                }
                o.expect(squares == csf::centralizer_order(mu), "orthogonality fails at mu=" + mu.to_string());
            }
        }
        std::mt19937_64 rng(20);
        const auto& labels = table20.partitions();
        std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
        for (int trial = 0; trial < 50; ++trial) {
            const auto& lam = labels[pick(rng)];
            const auto& mu = labels[pick(rng)];
            o.expect(table20.at(lam, mu) == oracle::slow_character(lam, mu),
                     "chi^" + lam.to_string() + "(" + mu.to_string() + ") disagrees with the slow evaluator");
        }
    });

    report(8, "screen soundness: every dominance certificate comes with a negative coefficient", [&](Outcome& o) {
        int certified = 0;
        for (const auto& g : screen_corpus()) {
            const auto cert = csf::dominance_screen(g);
            if (!cert) {
                continue;
            }
            ++certified;
            csf::CharacterTable table(g.vertex_count());
            table.build();
            o.expect(!csf::is_schur_positive(csf::csf_schur(g, table)),
                     "certificate " + cert->achieved.to_string() + " > " + cert->missing.to_string() +
                         " on a Schur-positive graph");
        }
        o.expect(certified > 0, "no certificates produced; the check is vacuous");
        std::printf("  %d certificates checked\n", certified);
    });

    report(9, "Kostka/dominance: K(lam,mu) > 0 iff lam dominates mu, n <= 8", [&](Outcome& o) {
        for (int n = 1; n <= 8; ++n) {
            const auto all = csf::partitions_of(n);
            for (const auto& lam : all) {
                for (const auto& mu : all) {
                    o.expect((csf::kostka(lam, mu) > 0) == csf::dominates(lam, mu),
                             "lam=" + lam.to_string() + " mu=" + mu.to_string());
                }
            }
        }
    });

    report(10, "determinism: an independent rerun produces byte-identical report JSON", [&](Outcome& o) {
        csf::CharacterTable fresh(20);
        fresh.build();
        o.expect(fresh.dense() == table20.dense(), "character tables differ");
        const auto again = csf::verify_theorem(10, fresh);
        const std::string second_dump = csf::dump_json(csf::theorem_to_json(again));
        o.expect(!first_dump.empty(), "criterion 1 produced no report");
        o.expect(second_dump == first_dump, "report bytes differ between runs");
    });

    std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
    return failures == 0 ? 0 : 1;
}

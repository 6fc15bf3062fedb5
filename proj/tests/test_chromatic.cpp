#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "csf/chromatic.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using csf::Basis;
using csf::Graph;
using csf::Integer;
using csf::Partition;
using csf::SymPoly;

TEST_CASE("power-sum expansion examples") {
    const SymPoly k2 = csf::csf_power_basis(csf::path_graph(2));
    CHECK(k2.coeff({1, 1}) == 1);
    CHECK(k2.coeff({2}) == -1);
    CHECK(k2.size() == 2);

    const SymPoly p3 = csf::csf_power_basis(csf::path_graph(3));
    CHECK(p3.coeff({1, 1, 1}) == 1);
    CHECK(p3.coeff({2, 1}) == -2);
    CHECK(p3.coeff({3}) == 1);
    CHECK(p3.size() == 3);

    CHECK(csf::csf_power_basis(Graph(1, {})) == SymPoly::basis_element(Basis::power, {1}));
    CHECK_THROWS_AS(csf::csf_power_basis(csf::complete_graph(8)), csf::UnsupportedSizeError);
}

TEST_CASE("power-sum expansion structure") {
    std::vector<Graph> graphs = {csf::cycle_graph(5), csf::complete_graph(4), csf::star_graph(6)};
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        graphs.push_back(oracle::random_tree(9, seed));
    }
    for (const auto& nu : csf::partitions_of(5)) {
        graphs.push_back(csf::spider(nu));
    }
    for (const auto& g : graphs) {
        const int n = g.vertex_count();
        const SymPoly f = csf::csf_power_basis(g);
        CHECK(f.coeff(Partition::ones(n)) == 1);
        if (g.is_tree()) {
            CHECK(f.coeff({n}) == ((n - 1) % 2 == 0 ? 1 : -1));
            for (const auto& [mu, c] : f.terms()) {
                const int expected = (n - static_cast<int>(mu.length())) % 2 == 0 ? 1 : -1;
                CHECK(c.sign() == expected);
            }
        }
    }
}

TEST_CASE("power-sum expansion ignores vertex labels") {
    std::mt19937 rng(99);
    const std::vector<Graph> graphs = {csf::spider({2, 1}), csf::cycle_graph(6), oracle::random_tree(8, 4),
                                       Graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}})};
    for (const auto& g : graphs) {
        std::vector<int> perm(static_cast<std::size_t>(g.vertex_count()));
        std::iota(perm.begin(), perm.end(), 0);
        const SymPoly base = csf::csf_power_basis(g);
        for (int trial = 0; trial < 5; ++trial) {
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(csf::csf_power_basis(g.relabeled(perm)) == base);
        }
    }
}

TEST_CASE("Schur expansions of small graphs") {
    csf::CharacterTable t2(2);
    const SymPoly k2 = csf::csf_schur(csf::path_graph(2), t2);
    CHECK(k2 == [] {
        SymPoly f(Basis::schur, 2);
        f.add({1, 1}, 2);
        return f;
    }());

    csf::CharacterTable t3(3);
    const SymPoly p3 = csf::csf_schur(csf::path_graph(3), t3);
    CHECK(p3.coeff({2, 1}) == 1);
    CHECK(p3.coeff({1, 1, 1}) == 4);
    CHECK(p3.size() == 2);

    // the claw is the classic graph whose expansion is not Schur positive
    csf::CharacterTable t4(4);
    const SymPoly claw = csf::csf_schur(csf::star_graph(3), t4);
    CHECK_FALSE(csf::negative_schur_coefficients(claw).empty());
}

TEST_CASE("negative coefficient listing follows partition order") {
    SymPoly f(Basis::schur, 3);
    f.add({1, 1, 1}, -2);
    f.add({3}, -1);
    f.add({2, 1}, 5);
    const auto neg = csf::negative_schur_coefficients(f);
    REQUIRE(neg.size() == 2);
    CHECK(neg[0].first == Partition{3});
    CHECK(neg[0].second == -1);
    CHECK(neg[1].first == Partition{1, 1, 1});

    SymPoly g(Basis::schur, 2);
    g.add({1, 1}, 2);
    CHECK(csf::negative_schur_coefficients(g).empty());
}

TEST_CASE("chromatic polynomial") {
    CHECK(csf::chromatic_polynomial_at(csf::path_graph(2), 3) == 6);
    CHECK(csf::chromatic_polynomial_at(csf::cycle_graph(5), 1) == 0);
    CHECK(csf::chromatic_polynomial_at(Graph(3, {}), 4) == 64);
    CHECK_THROWS_AS(csf::chromatic_polynomial_tree(csf::cycle_graph(4), 3), std::invalid_argument);

    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const Graph t = oracle::random_tree(2 + static_cast<int>(seed), seed);
        for (int k = 1; k <= 4; ++k) {
            CHECK(csf::chromatic_polynomial_deletion_contraction(t, k) == csf::chromatic_polynomial_tree(t, k));
        }
    }
    const std::vector<Graph> others = {csf::cycle_graph(5), csf::complete_graph(4), csf::cycle_graph(6),
                                       Graph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}})};
    for (const auto& g : others) {
        for (int k = 1; k <= 4; ++k) {
            CHECK(csf::chromatic_polynomial_at(g, k) == oracle::count_proper_colorings(g, k));
        }
    }
    // C_n: (k-1)^n + (-1)^n (k-1)
    CHECK(csf::chromatic_polynomial_at(csf::cycle_graph(7), 3) == 128 - 2);
}

TEST_CASE("Schur expansion evaluated at ones counts colorings") {
    const std::vector<Graph> graphs = {csf::cycle_graph(5), csf::spider({3, 1}), oracle::random_tree(8, 21)};
    for (const auto& g : graphs) {
        csf::CharacterTable table(g.vertex_count());
        table.build();
        const SymPoly s = csf::csf_schur(g, table);
        for (int k = 1; k <= 4; ++k) {
            Integer total = 0;
            for (const auto& [lam, c] : s.terms()) {
                total += c * csf::schur_principal_evaluation(lam, k);
            }
            CHECK(total == csf::chromatic_polynomial_at(g, k));
        }
    }
}

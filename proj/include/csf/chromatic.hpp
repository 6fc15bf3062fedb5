#pragma once

#include <utility>
#include <vector>

#include "csf/graph.hpp"
#include "csf/symfunc.hpp"

namespace csf {

inline constexpr std::size_t kMaxPowerExpansionEdges = 25;

/// X_G in the power-sum basis: the sum over edge subsets S of
/// (-1)^|S| p_{lambda(S)}, lambda(S) being the component sizes of (V, S).
/// Throws UnsupportedSizeError above kMaxPowerExpansionEdges edges.
SymPoly csf_power_basis(const Graph& g);

/// X_G in the Schur basis. The table must have degree |V|.
SymPoly csf_schur(const Graph& g, const CharacterTable& table);

using Term = std::pair<Partition, Integer>;

/// Terms with negative coefficient, in reverse-lexicographic order.
std::vector<Term> negative_schur_coefficients(const SymPoly& f);

/// Number of proper k-colorings. Uses the closed form k(k-1)^{|V|-1} for
/// trees and deletion-contraction otherwise.
Integer chromatic_polynomial_at(const Graph& g, int k);
Integer chromatic_polynomial_deletion_contraction(const Graph& g, int k);
/// Throws std::invalid_argument unless g is a tree.
Integer chromatic_polynomial_tree(const Graph& g, int k);

}  // namespace csf

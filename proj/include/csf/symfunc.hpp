#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "csf/integer.hpp"
#include "csf/partition.hpp"

namespace csf {

enum class Basis { power, schur, monomial };

std::string_view basis_name(Basis basis);

/// A homogeneous symmetric function of fixed degree, expanded in one basis
/// with exact integer coefficients. Zero coefficients are never stored, and
/// iteration follows the reverse-lexicographic order of the index partitions.
class SymPoly {
public:
    using Terms = std::map<Partition, Integer, ReverseLex>;

    SymPoly(Basis basis, int degree) : basis_(basis), degree_(degree) {}

    /// Single basis element b_lam (e.g. s_lam when basis is schur).
    static SymPoly basis_element(Basis basis, const Partition& lam);

    Basis basis() const { return basis_; }
    int degree() const { return degree_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Integer coeff(const Partition& lam) const;
    /// Adds `value` to the coefficient of `lam`; throws std::invalid_argument
    /// when lam has the wrong weight.
    void add(const Partition& lam, Integer value);

    SymPoly& operator+=(const SymPoly& other);
    SymPoly& operator*=(Integer scalar);

    friend bool operator==(const SymPoly& a, const SymPoly& b) = default;

private:
    Basis basis_;
    int degree_;
    Terms terms_;
};

/// Border strips of size `length` removable from `shape`, as (remaining
/// shape, height) pairs. Height is the number of rows the strip spans minus one.
std::vector<std::pair<Partition, int>> border_strip_removals(const Partition& shape, int length);

/// Memoized Murnaghan-Nakayama evaluator. The memo is keyed by the remaining
/// shape and the remaining cycle type; cycles are consumed largest first.
/// Not thread-safe.
class MnEngine {
public:
    Integer character(const Partition& lam, const Partition& mu);
    std::size_t memo_size() const;

private:
    struct Level {
        std::vector<Partition> partitions;
        std::unordered_map<Partition, std::uint32_t> index;
        std::unordered_map<std::uint64_t, Integer> memo;
    };
    Level& level(int weight);
    Integer evaluate(const Partition& shape, std::span<const int> cycles);

    std::vector<std::unique_ptr<Level>> levels_;
};

/// chi^lam(mu) by the Murnaghan-Nakayama rule. Throws std::invalid_argument
/// if the weights differ.
Integer mn_character(const Partition& lam, const Partition& mu);

/// Dimension of the irreducible representation: n! over the hook product.
Integer hook_dimension(const Partition& lam);

/// Irreducible characters of the symmetric group of one degree. Entries are
/// looked up on demand until build() fills the dense table; after build()
/// concurrent reads are safe.
class CharacterTable {
public:
    explicit CharacterTable(int degree);
    CharacterTable(CharacterTable&&) noexcept;
    CharacterTable& operator=(CharacterTable&&) noexcept;
    ~CharacterTable();

    int degree() const { return degree_; }
    /// Row and column labels, in partitions_of order.
    const std::vector<Partition>& partitions() const { return partitions_; }
    std::size_t index_of(const Partition& lam) const;

    void build();
    bool complete() const { return !dense_.empty(); }

    /// Row-major p(n) x p(n) values, row = lam, column = mu. Empty until built.
    const std::vector<Integer>& dense() const { return dense_; }
    /// Installs precomputed values (e.g. from a cache file). Throws
    /// std::invalid_argument on a size mismatch.
    void assign(std::vector<Integer> values);

    Integer at(const Partition& lam, const Partition& mu) const;
    /// Requires complete().
    Integer at_index(std::size_t lam, std::size_t mu) const {
        return dense_[lam * partitions_.size() + mu];
    }

private:
    struct Fallback;

    int degree_;
    std::vector<Partition> partitions_;
    std::unordered_map<Partition, std::size_t> index_;
    std::vector<Integer> dense_;
    std::unique_ptr<Fallback> fallback_;
};

/// K_{lam,mu}: semistandard tableaux of shape lam and content mu, counted by
/// enumerating chains of horizontal strips.
Integer kostka(const Partition& lam, const Partition& mu);

/// Power-sum to Schur expansion through p_mu = sum_lam chi^lam(mu) s_lam.
SymPoly p_to_s(const SymPoly& f, const CharacterTable& table);
SymPoly p_to_s(const SymPoly& f);

/// Schur to monomial expansion through s_lam = sum_mu K_{lam,mu} m_mu.
SymPoly s_to_m(const SymPoly& f);

/// s_lam(1, ..., 1) with k ones, by the hook-content formula.
Integer schur_principal_evaluation(const Partition& lam, int k);

}  // namespace csf

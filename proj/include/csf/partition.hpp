#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "csf/integer.hpp"

namespace csf {

/// Integer partition stored as its weakly decreasing positive parts. The
/// empty partition is the unique partition of 0.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless `parts` is weakly decreasing and positive.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    /// Sorts arbitrary positive parts into canonical order.
    static Partition from_unsorted(std::vector<int> parts);
    /// The partition (1, 1, ..., 1) of n.
    static Partition ones(int n);

    /// Parses the canonical text form "p1,p2,...". Parts must already be
    /// descending. The empty string is the empty partition.
    static Partition parse(std::string_view text);

    int weight() const { return weight_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    std::span<const int> parts() const { return parts_; }
    int operator[](std::size_t i) const { return parts_[i]; }
    /// Part i, or 0 beyond the length.
    int part_or_zero(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    /// Number of parts equal to `value`.
    int multiplicity(int value) const;

    std::string to_string() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// Strict order in which (n) comes first and (1^n) last.
struct ReverseLex {
    bool operator()(const Partition& a, const Partition& b) const;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept;
};

/// All partitions of n in reverse-lexicographic order.
std::vector<Partition> partitions_of(int n);

/// True iff every prefix sum of `lam` is at least the matching prefix sum of
/// `mu`. Throws std::invalid_argument if the weights differ.
bool dominates(const Partition& lam, const Partition& mu);

Partition conjugate(const Partition& lam);

/// Hook length of cell (row, col), both zero-based.
int hook_length(const Partition& lam, int row, int col);

/// Order of the centralizer of a permutation with cycle type `mu`.
Integer centralizer_order(const Partition& mu);

}  // namespace csf

template <>
struct std::hash<csf::Partition> : csf::PartitionHash {};

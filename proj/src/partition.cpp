#include "csf/partition.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace csf {

namespace {

void check_canonical(const std::vector<int>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) {
            throw std::invalid_argument("partition parts must be positive");
        }
        if (i > 0 && parts[i] > parts[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
}

void generate(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        generate(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    check_canonical(parts_);
    for (int p : parts_) {
        weight_ += p;
    }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::from_unsorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::ones(int n) {
    return Partition(std::vector<int>(static_cast<std::size_t>(n), 1));
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    if (text.empty()) {
        return Partition{};
    }
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view token = text.substr(pos, comma == std::string_view::npos ? text.size() - pos : comma - pos);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
            throw std::invalid_argument("malformed partition text '" + std::string(text) + "'");
        }
        parts.push_back(value);
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("partition '" + std::string(text) + "': " + e.what());
    }
}

int Partition::multiplicity(int value) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) {
            out.push_back(',');
        }
        out += std::to_string(parts_[i]);
    }
    return out;
}

bool ReverseLex::operator()(const Partition& a, const Partition& b) const {
    const auto pa = a.parts();
    const auto pb = b.parts();
    return std::lexicographical_compare(pb.begin(), pb.end(), pa.begin(), pa.end());
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int part : p.parts()) {
        h ^= static_cast<std::size_t>(part);
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) {
        throw std::invalid_argument("partitions_of: negative weight");
    }
    std::vector<Partition> out;
    std::vector<int> prefix;
    generate(n, n, prefix, out);
    return out;
}

bool dominates(const Partition& lam, const Partition& mu) {
    if (lam.weight() != mu.weight()) {
        throw std::invalid_argument("dominates: partitions " + lam.to_string() + " and " + mu.to_string() +
                                    " have different weights");
    }
    int sum_lam = 0;
    int sum_mu = 0;
    const std::size_t len = std::max(lam.length(), mu.length());
    for (std::size_t i = 0; i < len; ++i) {
        sum_lam += lam.part_or_zero(i);
        sum_mu += mu.part_or_zero(i);
        if (sum_lam < sum_mu) {
            return false;
        }
    }
    return true;
}

Partition conjugate(const Partition& lam) {
    if (lam.empty()) {
        return {};
    }
    std::vector<int> cols(static_cast<std::size_t>(lam[0]), 0);
    for (int part : lam.parts()) {
        for (int j = 0; j < part; ++j) {
            ++cols[static_cast<std::size_t>(j)];
        }
    }
    return Partition(std::move(cols));
}

int hook_length(const Partition& lam, int row, int col) {
    const int arm = lam[static_cast<std::size_t>(row)] - col - 1;
    int leg = 0;
    for (std::size_t r = static_cast<std::size_t>(row) + 1; r < lam.length() && lam[r] > col; ++r) {
        ++leg;
    }
    return arm + leg + 1;
}

Integer centralizer_order(const Partition& mu) {
    Integer z = 1;
    const auto parts = mu.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) {
            ++j;
        }
        for (std::size_t m = 1; m <= j - i; ++m) {
            z *= Integer(static_cast<std::int64_t>(m) * parts[i]);
        }
        i = j;
    }
    return z;
}

}  // namespace csf

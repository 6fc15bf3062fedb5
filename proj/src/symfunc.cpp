#include "csf/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>

namespace csf {

namespace {

void require_same_weight(const char* what, const Partition& lam, const Partition& mu) {
    if (lam.weight() != mu.weight()) {
        throw std::invalid_argument(std::string(what) + ": weights differ (" + lam.to_string() + " vs " +
                                    mu.to_string() + ")");
    }
}

// Counts chains empty = rho_0 < rho_1 < ... < rho_l = shape in which
// rho_j / rho_{j-1} is a horizontal strip of size content[j - 1].
Integer count_horizontal_strip_chains(const std::vector<int>& shape, std::span<const int> content) {
    if (content.empty()) {
        return shape.empty() || shape.front() == 0 ? Integer(1) : Integer(0);
    }
    const int strip = content.back();
    const auto rest = content.first(content.size() - 1);
    // the smaller shape interlaces: shape[i+1] <= inner[i] <= shape[i]
    std::vector<int> inner(shape.size(), 0);
    Integer total = 0;
    auto place = [&](auto&& self, std::size_t row, int left) -> void {
        if (row == shape.size()) {
            if (left == 0) {
                std::vector<int> trimmed = inner;
                while (!trimmed.empty() && trimmed.back() == 0) {
                    trimmed.pop_back();
                }
                if (trimmed.size() <= rest.size()) {
                    total += count_horizontal_strip_chains(trimmed, rest);
                }
            }
            return;
        }
        const int lower = row + 1 < shape.size() ? shape[row + 1] : 0;
        const int upper = shape[row];
        for (int keep = upper; keep >= lower; --keep) {
            const int removed = upper - keep;
            if (removed > left) {
                break;
            }
            inner[row] = keep;
            self(self, row + 1, left - removed);
        }
    };
    place(place, 0, strip);
    return total;
}

}  // namespace

std::string_view basis_name(Basis basis) {
    switch (basis) {
        case Basis::power: return "power";
        case Basis::schur: return "schur";
        case Basis::monomial: return "monomial";
    }
    return "?";
}

SymPoly SymPoly::basis_element(Basis basis, const Partition& lam) {
    SymPoly f(basis, lam.weight());
    f.add(lam, 1);
    return f;
}

Integer SymPoly::coeff(const Partition& lam) const {
    const auto it = terms_.find(lam);
    return it == terms_.end() ? Integer(0) : it->second;
}

void SymPoly::add(const Partition& lam, Integer value) {
    if (lam.weight() != degree_) {
        throw std::invalid_argument("SymPoly::add: index " + lam.to_string() + " is not a partition of " +
                                    std::to_string(degree_));
    }
    if (value.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(lam, value);
    if (!inserted) {
        it->second += value;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

SymPoly& SymPoly::operator+=(const SymPoly& other) {
    if (other.basis_ != basis_ || other.degree_ != degree_) {
        throw std::invalid_argument("SymPoly: basis or degree mismatch in addition");
    }
    for (const auto& [lam, c] : other.terms_) {
        add(lam, c);
    }
    return *this;
}

SymPoly& SymPoly::operator*=(Integer scalar) {
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [lam, c] : terms_) {
        c *= scalar;
    }
    return *this;
}

std::vector<std::pair<Partition, int>> border_strip_removals(const Partition& shape, int length) {
    std::vector<std::pair<Partition, int>> out;
    if (length <= 0 || length > shape.weight()) {
        return out;
    }
    const int rows = static_cast<int>(shape.length());
    // beta numbers: first-column hook lengths, strictly decreasing
    std::vector<int> beta(shape.length());
    for (int i = 0; i < rows; ++i) {
        beta[static_cast<std::size_t>(i)] = shape[static_cast<std::size_t>(i)] + rows - 1 - i;
    }
    for (int i = 0; i < rows; ++i) {
        const int from = beta[static_cast<std::size_t>(i)];
        const int to = from - length;
        if (to < 0 || std::find(beta.begin(), beta.end(), to) != beta.end()) {
            continue;
        }
        int height = 0;
        for (int b : beta) {
            if (b > to && b < from) {
                ++height;
            }
        }
        std::vector<int> moved = beta;
        moved[static_cast<std::size_t>(i)] = to;
        std::sort(moved.begin(), moved.end(), std::greater<>());
        std::vector<int> parts;
        for (int j = 0; j < rows; ++j) {
            const int part = moved[static_cast<std::size_t>(j)] - (rows - 1 - j);
            if (part > 0) {
                parts.push_back(part);
            }
        }
        out.emplace_back(Partition(std::move(parts)), height);
    }
    return out;
}

MnEngine::Level& MnEngine::level(int weight) {
    const auto w = static_cast<std::size_t>(weight);
    if (levels_.size() <= w) {
        levels_.resize(w + 1);
    }
    if (!levels_[w]) {
        auto fresh = std::make_unique<Level>();
        fresh->partitions = partitions_of(weight);
        fresh->index.reserve(fresh->partitions.size());
        for (std::size_t i = 0; i < fresh->partitions.size(); ++i) {
            fresh->index.emplace(fresh->partitions[i], static_cast<std::uint32_t>(i));
        }
        levels_[w] = std::move(fresh);
    }
    return *levels_[w];
}

std::size_t MnEngine::memo_size() const {
    std::size_t total = 0;
    for (const auto& lvl : levels_) {
        if (lvl) {
            total += lvl->memo.size();
        }
    }
    return total;
}

Integer MnEngine::character(const Partition& lam, const Partition& mu) {
    require_same_weight("mn_character", lam, mu);
    return evaluate(lam, mu.parts());
}

Integer MnEngine::evaluate(const Partition& shape, std::span<const int> cycles) {
    if (cycles.empty()) {
        return 1;
    }
    Level& lvl = level(shape.weight());
    const Partition remaining(std::vector<int>(cycles.begin(), cycles.end()));
    const std::uint64_t key = (static_cast<std::uint64_t>(lvl.index.at(shape)) << 32) | lvl.index.at(remaining);
    if (const auto it = lvl.memo.find(key); it != lvl.memo.end()) {
        return it->second;
    }
    Integer value = 0;
    for (const auto& [smaller, height] : border_strip_removals(shape, cycles.front())) {
        const Integer sub = evaluate(smaller, cycles.subspan(1));
        if (height % 2 == 0) {
            value += sub;
        } else {
            value -= sub;
        }
    }
    lvl.memo.emplace(key, value);
    return value;
}

Integer mn_character(const Partition& lam, const Partition& mu) {
    static std::mutex mutex;
    static MnEngine engine;
    std::lock_guard lock(mutex);
    return engine.character(lam, mu);
}

Integer hook_dimension(const Partition& lam) {
    Integer hooks = 1;
    for (std::size_t i = 0; i < lam.length(); ++i) {
        for (int j = 0; j < lam[i]; ++j) {
            hooks *= hook_length(lam, static_cast<int>(i), j);
        }
    }
    return factorial(lam.weight()) / hooks;
}

struct CharacterTable::Fallback {
    std::mutex mutex;
    MnEngine engine;
};

CharacterTable::CharacterTable(int degree)
    : degree_(degree), partitions_(partitions_of(degree)), fallback_(std::make_unique<Fallback>()) {
    index_.reserve(partitions_.size());
    for (std::size_t i = 0; i < partitions_.size(); ++i) {
        index_.emplace(partitions_[i], i);
    }
}

CharacterTable::CharacterTable(CharacterTable&&) noexcept = default;
CharacterTable& CharacterTable::operator=(CharacterTable&&) noexcept = default;
CharacterTable::~CharacterTable() = default;

std::size_t CharacterTable::index_of(const Partition& lam) const {
    const auto it = index_.find(lam);
    if (it == index_.end()) {
        throw std::invalid_argument("CharacterTable: " + lam.to_string() + " is not a partition of " +
                                    std::to_string(degree_));
    }
    return it->second;
}

void CharacterTable::build() {
    if (complete()) {
        return;
    }
    const std::size_t count = partitions_.size();
    std::vector<Integer> values(count * count);
    std::lock_guard lock(fallback_->mutex);
    for (std::size_t m = 0; m < count; ++m) {
        for (std::size_t l = 0; l < count; ++l) {
            values[l * count + m] = fallback_->engine.character(partitions_[l], partitions_[m]);
        }
    }
    dense_ = std::move(values);
    fallback_->engine = MnEngine{};
}

void CharacterTable::assign(std::vector<Integer> values) {
    if (values.size() != partitions_.size() * partitions_.size()) {
        throw std::invalid_argument("CharacterTable::assign: expected " +
                                    std::to_string(partitions_.size() * partitions_.size()) + " values");
    }
    dense_ = std::move(values);
}

Integer CharacterTable::at(const Partition& lam, const Partition& mu) const {
    const std::size_t l = index_of(lam);
    const std::size_t m = index_of(mu);
    if (complete()) {
        return at_index(l, m);
    }
    std::lock_guard lock(fallback_->mutex);
    return fallback_->engine.character(lam, mu);
}

Integer kostka(const Partition& lam, const Partition& mu) {
    require_same_weight("kostka", lam, mu);
    const auto parts = lam.parts();
    return count_horizontal_strip_chains(std::vector<int>(parts.begin(), parts.end()), mu.parts());
}

SymPoly p_to_s(const SymPoly& f, const CharacterTable& table) {
    if (f.basis() != Basis::power) {
        throw std::invalid_argument("p_to_s: input must be in the power-sum basis");
    }
    if (f.degree() != table.degree()) {
        throw std::invalid_argument("p_to_s: character table has degree " + std::to_string(table.degree()) +
                                    ", input has degree " + std::to_string(f.degree()));
    }
    SymPoly out(Basis::schur, f.degree());
    const auto& labels = table.partitions();
    std::vector<std::pair<std::size_t, Integer>> columns;
    columns.reserve(f.size());
    for (const auto& [mu, c] : f.terms()) {
        columns.emplace_back(table.index_of(mu), c);
    }
    for (std::size_t l = 0; l < labels.size(); ++l) {
        Integer sum = 0;
        for (const auto& [m, c] : columns) {
            sum += c * (table.complete() ? table.at_index(l, m) : table.at(labels[l], labels[m]));
        }
        out.add(labels[l], sum);
    }
    return out;
}

SymPoly p_to_s(const SymPoly& f) {
    return p_to_s(f, CharacterTable(f.degree()));
}

SymPoly s_to_m(const SymPoly& f) {
    if (f.basis() != Basis::schur) {
        throw std::invalid_argument("s_to_m: input must be in the Schur basis");
    }
    SymPoly out(Basis::monomial, f.degree());
    if (f.is_zero()) {
        return out;
    }
    for (const Partition& mu : partitions_of(f.degree())) {
        Integer sum = 0;
        for (const auto& [lam, c] : f.terms()) {
            sum += c * kostka(lam, mu);
        }
        out.add(mu, sum);
    }
    return out;
}

Integer schur_principal_evaluation(const Partition& lam, int k) {
    if (k < 1) {
        throw std::invalid_argument("schur_principal_evaluation: k must be positive");
    }
    if (lam.length() > static_cast<std::size_t>(k)) {
        return 0;
    }
    Integer numerator = 1;
    Integer hooks = 1;
    for (std::size_t i = 0; i < lam.length(); ++i) {
        for (int j = 0; j < lam[i]; ++j) {
            numerator *= k + j - static_cast<int>(i);
            hooks *= hook_length(lam, static_cast<int>(i), j);
        }
    }
    return numerator / hooks;
}

}  // namespace csf

#include "csf/chartable_cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>

namespace csf {

namespace {

std::string header_line(int n, std::size_t count) {
    return "CHARTABLE v1 n=" + std::to_string(n) + " count=" + std::to_string(count);
}

bool fail(std::string* reason, std::string message) {
    if (reason) {
        *reason = std::move(message);
    }
    return false;
}

}  // namespace

void write_character_table(const std::filesystem::path& path, const CharacterTable& table) {
    if (!table.complete()) {
        throw std::invalid_argument("write_character_table: table has not been built");
    }
    std::error_code ec;
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec) {
            throw IoError("cannot create directory " + path.parent_path().string() + ": " + ec.message());
        }
    }
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError("cannot open " + tmp.string() + " for writing");
        }
        const auto& labels = table.partitions();
        std::vector<std::string> text;
        text.reserve(labels.size());
        for (const auto& p : labels) {
            text.push_back(p.to_string());
        }
        out << header_line(table.degree(), labels.size()) << '\n';
        for (std::size_t l = 0; l < labels.size(); ++l) {
            for (std::size_t m = 0; m < labels.size(); ++m) {
                out << text[l] << ' ' << text[m] << ' ' << table.at_index(l, m).to_string() << '\n';
            }
        }
        out.flush();
        if (!out) {
            throw IoError("write to " + tmp.string() + " failed");
        }
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw IoError("cannot move cache into place at " + path.string());
    }
}

std::optional<CharacterTable> read_character_table(const std::filesystem::path& path, int n, std::string* reason) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail(reason, "no cache at " + path.string());
        return std::nullopt;
    }
    CharacterTable table(n);
    const auto& labels = table.partitions();
    const std::size_t count = labels.size();
    std::string line;
    if (!std::getline(in, line) || line != header_line(n, count)) {
        fail(reason, "header mismatch");
        return std::nullopt;
    }
    std::vector<Integer> values(count * count);
    std::size_t row = 0;
    try {
        for (std::size_t l = 0; l < count; ++l) {
            for (std::size_t m = 0; m < count; ++m, ++row) {
                if (!std::getline(in, line)) {
                    fail(reason, "truncated after " + std::to_string(row) + " entries");
                    return std::nullopt;
                }
                std::istringstream fields(line);
                std::string lam, mu, value, extra;
                if (!(fields >> lam >> mu >> value) || (fields >> extra)) {
                    fail(reason, "malformed line " + std::to_string(row + 2));
                    return std::nullopt;
                }
                if (Partition::parse(lam) != labels[l] || Partition::parse(mu) != labels[m]) {
                    fail(reason, "unexpected labels on line " + std::to_string(row + 2));
                    return std::nullopt;
                }
                values[l * count + m] = Integer::parse(value);
            }
        }
    } catch (const std::exception& e) {
        fail(reason, std::string("unparsable entry: ") + e.what());
        return std::nullopt;
    }
    if (std::getline(in, line) && !line.empty()) {
        fail(reason, "trailing data");
        return std::nullopt;
    }
    table.assign(std::move(values));
    if (!validate_character_table(table)) {
        fail(reason, "orthogonality check failed");
        return std::nullopt;
    }
    return table;
}

bool validate_character_table(const CharacterTable& table) {
    if (!table.complete()) {
        return false;
    }
    const auto& labels = table.partitions();
    const Integer order = factorial(table.degree());
    std::vector<Integer> class_size;
    class_size.reserve(labels.size());
    for (const auto& mu : labels) {
        class_size.push_back(order / centralizer_order(mu));
    }
    try {
        for (std::size_t l = 0; l < labels.size(); ++l) {
            Integer linear = 0;
            Integer square = 0;
            for (std::size_t m = 0; m < labels.size(); ++m) {
                const Integer chi = table.at_index(l, m);
                linear += class_size[m] * chi;
                square += class_size[m] * chi * chi;
            }
            if (linear != (l == 0 ? order : Integer(0)) || square != order) {
                return false;
            }
        }
    } catch (const OverflowError&) {
        return false;
    }
    return true;
}

LoadedTable load_or_build_table(int n, const std::optional<std::filesystem::path>& cache,
                                const std::function<void(std::string_view)>& log) {
    auto say = [&](const std::string& msg) {
        if (log) {
            log(msg);
        }
    };
    if (cache) {
        std::string reason;
        if (auto table = read_character_table(*cache, n, &reason)) {
            say("character table n=" + std::to_string(n) + " loaded from " + cache->string());
            return {std::move(*table), TableSource::cache};
        }
        say("character table cache not used: " + reason + "; rebuilding");
    }
    CharacterTable table(n);
    table.build();
    say("character table n=" + std::to_string(n) + " computed (" + std::to_string(table.partitions().size()) +
        " classes)");
    if (cache) {
        write_character_table(*cache, table);
        say("character table written to " + cache->string());
    }
    return {std::move(table), TableSource::computed};
}

std::optional<std::filesystem::path> default_cache_path(int n) {
    const char* dir = std::getenv("CSF_CACHE_DIR");
    if (dir == nullptr || *dir == '\0') {
        return std::nullopt;
    }
    return std::filesystem::path(dir) / ("chartable_" + std::to_string(n) + ".txt");
}

}  // namespace csf

#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "csf/symfunc.hpp"

namespace csf {

/// File-system failure while reading or writing persisted data.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Text cache layout:
///
///     CHARTABLE v1 n=<n> count=<p(n)>
///     <lambda> <mu> <value>        (p(n)^2 lines, partitions as "p1,p2,...")
///
/// Rows follow partitions_of order for lambda, then for mu.
void write_character_table(const std::filesystem::path& path, const CharacterTable& table);

/// Reads a cache for degree n. Returns nullopt when the file is missing,
/// malformed, for another degree, or fails validate_character_table.
/// `reason` receives a short diagnostic when the result is nullopt.
std::optional<CharacterTable> read_character_table(const std::filesystem::path& path, int n,
                                                   std::string* reason = nullptr);

/// Checks the orthogonality relations sum_mu |C_mu| chi^lam(mu) = n! [lam = (n)]
/// and sum_mu |C_mu| chi^lam(mu)^2 = n! for every row. Any single corrupted
/// entry breaks one of them.
bool validate_character_table(const CharacterTable& table);

enum class TableSource { computed, cache };

struct LoadedTable {
    CharacterTable table;
    TableSource source;
};

/// Loads the table from `cache` if it holds a valid one, otherwise computes
/// it and (when a path is given) rewrites the cache atomically.
LoadedTable load_or_build_table(int n, const std::optional<std::filesystem::path>& cache,
                                const std::function<void(std::string_view)>& log = {});

/// Cache file for degree n inside $CSF_CACHE_DIR, or nullopt if unset.
std::optional<std::filesystem::path> default_cache_path(int n);

}  // namespace csf

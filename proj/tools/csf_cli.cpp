// csf: chromatic symmetric functions of spider trees and the degree-n
// positivity check. Every command prints one JSON document on stdout;
// progress goes to stderr.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "csf/chartable_cache.hpp"
#include "csf/graph.hpp"
#include "csf/positivity.hpp"
#include "csf/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitOverflow = 3;
constexpr int kExitIo = 4;

constexpr int kMaxChartableDegree = 22;

using csf::Json;
namespace fs = std::filesystem;

void progress(std::string_view msg) {
    std::cerr << "csf: " << msg << '\n';
}

std::optional<fs::path> cache_for(const std::string& flag, int degree) {
    if (!flag.empty()) {
        return fs::path(flag);
    }
    return csf::default_cache_path(degree);
}

void emit(const Json& doc) {
    std::cout << csf::dump_json(doc);
}

int cmd_spider(const std::string& nu_text) {
    const csf::Partition nu = csf::Partition::parse(nu_text);
    csf::PhaseTimer timer;
    timer.start("construct");
    const csf::Graph g = csf::spider(nu);
    timer.stop();
    Json inputs;
    inputs["nu"] = csf::partition_to_json(nu);
    emit(csf::report_document("spider", std::move(inputs), csf::graph_to_json(g), timer));
    return kExitOk;
}

int cmd_expand(const std::string& nu_text, const std::string& cache_flag) {
    const csf::Partition nu = csf::Partition::parse(nu_text);
    const csf::Graph g = csf::spider(nu);
    csf::PhaseTimer timer;
    timer.start("character_table");
    auto loaded = csf::load_or_build_table(g.vertex_count(), cache_for(cache_flag, g.vertex_count()), progress);
    timer.start("expansion");
    const csf::PositivityReport report = csf::positivity_report(nu, g, loaded.table);
    timer.stop();

    Json inputs;
    inputs["nu"] = csf::partition_to_json(nu);
    inputs["cache"] = cache_flag;
    Json results = csf::report_to_json(report);
    results["table_source"] = loaded.source == csf::TableSource::cache ? "cache" : "computed";
    emit(csf::report_document("expand", std::move(inputs), std::move(results), timer));
    return kExitOk;
}

int cmd_verify(int n, const std::string& cache_flag, const std::string& out_path, bool force) {
    if (n < 1) {
        throw std::invalid_argument("--n must be at least 1");
    }
    if (n >= csf::kLargeTheoremDegree && !force) {
        throw std::invalid_argument("n = " + std::to_string(n) + " enumerates 2^" + std::to_string(2 * n - 1) +
                                    " edge subsets per tree; pass --force to run anyway");
    }
    csf::PhaseTimer timer;
    timer.start("character_table");
    auto loaded = csf::load_or_build_table(2 * n, cache_for(cache_flag, 2 * n), progress);
    timer.start("expansions");
    const csf::TheoremRun run = csf::verify_theorem(n, loaded.table, progress);
    timer.start("serialize");
    Json report = csf::theorem_to_json(run);
    Json results;
    if (!out_path.empty()) {
        const fs::path path(out_path);
        const fs::path tmp = fs::path(out_path + ".tmp");
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            out << csf::dump_json(report);
            if (!out.flush()) {
                throw csf::IoError("cannot write report to " + tmp.string());
            }
        }
        std::error_code ec;
        fs::rename(tmp, path, ec);
        if (ec) {
            throw csf::IoError("cannot move report into place at " + path.string());
        }
        Json counts = Json::array();
        for (const auto& r : run.reports) {
            Json entry;
            entry["nu"] = csf::partition_to_json(r.nu);
            entry["negative"] = r.negative.size();
            counts.push_back(std::move(entry));
        }
        results["schema_version"] = csf::kSchemaVersion;
        results["n"] = n;
        results["candidates"] = run.reports.size();
        results["negative_counts"] = std::move(counts);
        results["report_path"] = out_path;
        results["verdict"] = csf::verdict_name(run.verdict);
    } else {
        results = std::move(report);
    }
    timer.stop();
    progress(std::string(csf::verdict_name(run.verdict)));

    Json inputs;
    inputs["n"] = n;
    inputs["cache"] = cache_flag;
    inputs["out"] = out_path;
    inputs["force"] = force;
    emit(csf::report_document("verify", std::move(inputs), std::move(results), timer));
    return kExitOk;
}

int cmd_chartable(int n, const std::string& cache_flag) {
    if (n < 1 || n > kMaxChartableDegree) {
        throw std::invalid_argument("--n must be between 1 and " + std::to_string(kMaxChartableDegree));
    }
    csf::PhaseTimer timer;
    timer.start("character_table");
    auto loaded = csf::load_or_build_table(n, fs::path(cache_flag), progress);
    timer.stop();
    Json inputs;
    inputs["n"] = n;
    inputs["cache"] = cache_flag;
    Json results;
    results["n"] = n;
    results["classes"] = loaded.table.partitions().size();
    results["source"] = loaded.source == csf::TableSource::cache ? "cache" : "computed";
    results["path"] = cache_flag;
    emit(csf::report_document("chartable", std::move(inputs), std::move(results), timer));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chromatic symmetric functions of spider trees and their Schur positivity"};
    app.require_subcommand(1);

    std::string nu_text;
    std::string cache;
    std::string out;
    int n = 0;
    bool force = false;

    auto* spider_cmd = app.add_subcommand("spider", "Print the spider tree T(nu) as JSON");
    spider_cmd->add_option("--nu", nu_text, "Partition as comma-separated descending parts")->required();

    auto* expand_cmd = app.add_subcommand("expand", "Schur expansion of X_{T(nu)}");
    expand_cmd->add_option("--nu", nu_text, "Partition as comma-separated descending parts")->required();
    expand_cmd->add_option("--cache", cache, "Character table cache file");

    auto* verify_cmd = app.add_subcommand("verify", "Check every tree on 2n vertices with a degree-n vertex");
    verify_cmd->add_option("--n", n, "Hub degree")->required();
    verify_cmd->add_option("--cache", cache, "Character table cache file");
    verify_cmd->add_option("--out", out, "Write the full report JSON here");
    verify_cmd->add_flag("--force", force, "Allow n >= 11");

    auto* table_cmd = app.add_subcommand("chartable", "Build and persist the character table of S_n");
    table_cmd->add_option("--n", n, "Degree")->required();
    table_cmd->add_option("--cache", cache, "Output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*spider_cmd) {
            return cmd_spider(nu_text);
        }
        if (*expand_cmd) {
            return cmd_expand(nu_text, cache);
        }
        if (*verify_cmd) {
            return cmd_verify(n, cache, out, force);
        }
        return cmd_chartable(n, cache);
    } catch (const csf::OverflowError& e) {
        std::cerr << "csf: arithmetic overflow: " << e.what() << '\n';
        return kExitOverflow;
    } catch (const csf::IoError& e) {
        std::cerr << "csf: I/O error: " << e.what() << '\n';
        return kExitIo;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "csf: I/O error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "csf: " << e.what() << '\n';
        return kExitUsage;
    }
}

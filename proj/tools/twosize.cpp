#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "twosize/twosize.hpp"

namespace {

using namespace twosize;

enum class Format { table, csv, jsonl };

Format parse_format(const std::string& name) {
    if (name == "table")
        return Format::table;
    if (name == "csv")
        return Format::csv;
    return Format::jsonl;
}

void emit_partition_line(Format format, const std::string& text) {
    if (format == Format::jsonl)
        std::cout << nlohmann::json{{"partition", text}}.dump() << '\n';
    else
        std::cout << text << '\n';
}

void emit_partition_header(Format format) {
    if (format == Format::csv)
        std::cout << "partition\n";
}

int run_enumerate(std::uint64_t n, unsigned k, bool count_only, Format format) {
    if (count_only) {
        const std::uint64_t count = count_k_sizes(n, k);
        if (format == Format::csv)
            std::cout << "count\n" << count << '\n';
        else if (format == Format::jsonl)
            std::cout << nlohmann::json{{"count", count}}.dump() << '\n';
        else
            std::cout << count << '\n';
        return 0;
    }
    emit_partition_header(format);
    if (k == 2) {
        for (const auto& p : enumerate_two_size(n))
            emit_partition_line(format, format_partition(p));
    } else {
        for (const auto& p : enumerate_k_sizes(n, k))
            emit_partition_line(format, format_partition(p));
    }
    return 0;
}

int run_classify(std::uint64_t n, Format format) {
    const auto census = class_census(n);
    const std::uint64_t total = census_total(census);
    if (format == Format::csv)
        std::cout << "class,count\n";
    for (const auto& [key, count] : census) {
        const std::string name = key.to_string();
        if (format == Format::table)
            std::cout << name << std::string(8 - name.size(), ' ') << count
                      << '\n';
        else if (format == Format::csv)
            std::cout << name << ',' << count << '\n';
        else
            std::cout << nlohmann::json{{"class", name}, {"count", count}}.dump()
                      << '\n';
    }
    if (format == Format::table)
        std::cout << "total   " << total << '\n';
    else if (format == Format::csv)
        std::cout << "total," << total << '\n';
    else
        std::cout << nlohmann::json{{"class", "total"}, {"count", total}}.dump()
                  << '\n';
    return 0;
}

int run_map(const std::string& name, const std::string& text, Format format) {
    const FrequencyPartition parsed = parse_partition(text);
    std::string image;
    if (name == "conj") {
        image = format_partition(conjugate(parsed));
    } else {
        const TwoSizePartition p = to_two_size(parsed);
        if (name == "rho")
            image = format_partition(rho(p));
        else if (name == "phibar")
            image = format_partition(phi_bar(p));
        else if (name == "tau")
            image = format_partition(tau(p));
        else
            image = format_partition(conj_rho_conj(p));
    }
    emit_partition_header(format);
    emit_partition_line(format, image);
    return 0;
}

void emit_report(const IdentityReport& report, Format format) {
    if (format == Format::csv) {
        std::cout << to_csv_row(report) << '\n';
        return;
    }
    if (format == Format::jsonl) {
        std::cout << to_jsonl(report) << '\n';
        return;
    }
    std::cout << report.identity_id << " n=" << report.n
              << (report.holds ? " holds " : " FAILS ");
    std::string values;
    for (const auto& [name, v] : report.values) {
        if (!values.empty())
            values += ';';
        values += name + "=" + std::to_string(v);
    }
    std::cout << values;
    if (!report.witnesses.empty()) {
        std::cout << " witnesses=";
        for (std::size_t i = 0; i < report.witnesses.size(); ++i)
            std::cout << (i ? "|" : "") << report.witnesses[i];
    }
    std::cout << '\n';
}

void emit_report_header(Format format) {
    if (format == Format::csv)
        std::cout << report_csv_header << '\n';
}

void emit_summary(Format format, const std::string& line) {
    // The summary never pollutes a machine-readable data stream.
    if (format == Format::table)
        std::cout << line << '\n';
    else
        std::cerr << line << '\n';
}

int run_verify(const std::string& id, std::uint64_t to_weight, bool has_single,
               std::uint64_t single_n, Format format, bool quiet) {
    std::vector<std::string> ids;
    if (id == "all")
        ids = identity_ids();
    else
        ids.push_back(id);
    for (const auto& name : ids)
        identity_residue(name); // rejects unknown ids before any output
    emit_report_header(format);
    std::uint64_t checks = 0, failures = 0;
    for (const auto& name : ids) {
        const auto [mod, rem] = identity_residue(name);
        std::vector<std::uint64_t> weights;
        if (has_single) {
            if (single_n % mod == rem)
                weights.push_back(single_n);
        } else {
            for (std::uint64_t w = rem; w <= to_weight; w += mod)
                weights.push_back(w);
        }
        std::uint64_t done = 0;
        for (const std::uint64_t w : weights) {
            const IdentityReport report = verify_identity(name, w);
            ++checks;
            if (!report.holds)
                ++failures;
            emit_report(report, format);
            if (!quiet && ++done % 128 == 0)
                std::cerr << "progress: " << name << " " << done << "/"
                          << weights.size() << '\n';
        }
    }
    emit_summary(format,
                 "checks=" + std::to_string(checks) +
                     " failures=" + std::to_string(failures));
    return failures == 0 ? 0 : 1;
}

int run_conjecture(const CongruenceFamily& family, const std::string& stat_name,
                   std::uint64_t max_index, Format format, bool quiet,
                   bool strict) {
    const RankStat stat = parse_rank_stat(stat_name);
    emit_report_header(format);
    const auto reports = check_conjecture(family, stat, max_index);
    std::uint64_t counterexamples = 0;
    std::uint64_t done = 0;
    for (const auto& report : reports) {
        if (!report.holds)
            ++counterexamples;
        emit_report(report, format);
        if (!quiet && ++done % 128 == 0)
            std::cerr << "progress: " << done << "/" << reports.size() << '\n';
    }
    emit_summary(format,
                 "members=" + std::to_string(reports.size()) +
                     " counterexamples=" + std::to_string(counterexamples));
    return (strict && counterexamples > 0) ? 1 : 0;
}

int run_series(unsigned k, std::uint64_t n_max, Format format) {
    const auto coefficients = nu_k_series(k, n_max);
    if (format == Format::csv)
        std::cout << "n,coefficient\n";
    for (std::uint64_t n = 0; n < coefficients.size(); ++n) {
        if (format == Format::table)
            std::cout << n << ' ' << coefficients[n] << '\n';
        else if (format == Format::csv)
            std::cout << n << ',' << coefficients[n] << '\n';
        else
            std::cout << nlohmann::json{{"n", n},
                                        {"coefficient", coefficients[n]}}
                             .dump()
                      << '\n';
    }
    return 0;
}

CongruenceFamily parse_family(const std::string& text, std::uint64_t modulus) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw std::domain_error("family must be given as A,B (e.g. 16,14)");
    CongruenceFamily family;
    family.modulus = modulus;
    try {
        family.stride = std::stoull(text.substr(0, comma));
        family.offset = std::stoull(text.substr(comma + 1));
    } catch (const std::exception&) {
        throw std::domain_error("family must be given as A,B (e.g. 16,14)");
    }
    return family;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"partitions into exactly two part sizes: enumeration, parity "
                 "classes, bijections, identity verification"};
    app.require_subcommand(1);

    std::string format_name = "table";
    bool quiet = false;
    bool strict = false;
    app.add_option("--format", format_name, "output format")
        ->check(CLI::IsMember({"table", "csv", "jsonl"}))
        ->capture_default_str();
    app.add_flag("--quiet", quiet, "suppress progress diagnostics");
    app.add_flag("--strict", strict,
                 "exit nonzero when a conjecture counterexample is found");

    auto* enumerate_cmd =
        app.add_subcommand("enumerate", "list partitions with exactly k part sizes");
    std::uint64_t enum_n = 0;
    unsigned enum_k = 2;
    bool count_only = false;
    enumerate_cmd->add_option("--n", enum_n, "weight to partition")->required();
    enumerate_cmd->add_option("--k", enum_k, "number of distinct part sizes")
        ->check(CLI::Range(1u, 3u))
        ->capture_default_str();
    enumerate_cmd->add_flag("--count-only", count_only, "print only the count");

    auto* classify_cmd =
        app.add_subcommand("classify", "marked parity-class census of weight n");
    std::uint64_t classify_n = 0;
    classify_cmd->add_option("--n", classify_n, "weight, must be 2 (mod 4)")
        ->required();

    auto* map_cmd = app.add_subcommand("map", "apply a bijection to a partition");
    std::string map_name;
    std::vector<std::string> map_tokens;
    map_cmd->add_option("name", map_name, "one of conj, rho, phibar, tau, crc")
        ->required()
        ->check(CLI::IsMember({"conj", "rho", "phibar", "tau", "crc"}));
    map_cmd->add_option("partition", map_tokens, "partition, e.g. 4^6 3^2")
        ->required()
        ->expected(-1);

    auto* verify_cmd =
        app.add_subcommand("verify", "check a named identity over a range");
    std::string verify_id;
    std::uint64_t verify_to = 0;
    std::uint64_t verify_n = 0;
    verify_cmd->add_option("id", verify_id, "identity name or 'all'")->required();
    auto* to_opt = verify_cmd->add_option(
        "--to", verify_to, "check all admissible weights up to this bound");
    auto* n_opt =
        verify_cmd->add_option("--n", verify_n, "check one absolute weight");
    to_opt->excludes(n_opt);

    auto* conjecture_cmd =
        app.add_subcommand("conjecture", "scan a congruence family with a rank statistic");
    std::string family_text;
    std::string stat_name;
    std::uint64_t max_index = 0;
    std::uint64_t modulus = 4;
    conjecture_cmd->add_option("--family", family_text, "progression A,B")
        ->required();
    conjecture_cmd->add_option("--stat", stat_name, "rk, rk2 or crank")
        ->required()
        ->check(CLI::IsMember({"rk", "rk2", "crank"}));
    conjecture_cmd->add_option("--n-max", max_index, "largest progression index")
        ->required();
    conjecture_cmd->add_option("--modulus", modulus, "divisibility modulus")
        ->capture_default_str();

    auto* series_cmd =
        app.add_subcommand("series", "dump nu_k generating-function coefficients");
    unsigned series_k = 0;
    std::uint64_t series_n_max = 0;
    series_cmd->add_option("--k", series_k, "number of part sizes")
        ->required()
        ->check(CLI::Range(1u, 3u));
    series_cmd->add_option("--n-max", series_n_max, "largest exponent")
        ->required();

    for (auto* sub : app.get_subcommands({}))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        app.exit(e);
        return 2;
    }

    const Format format = parse_format(format_name);
    try {
        if (enumerate_cmd->parsed())
            return run_enumerate(enum_n, enum_k, count_only, format);
        if (classify_cmd->parsed())
            return run_classify(classify_n, format);
        if (map_cmd->parsed()) {
            std::string text;
            for (const auto& token : map_tokens) {
                if (!text.empty())
                    text += ' ';
                text += token;
            }
            return run_map(map_name, text, format);
        }
        if (verify_cmd->parsed()) {
            if (to_opt->count() == 0 && n_opt->count() == 0)
                throw std::domain_error("verify requires --to or --n");
            return run_verify(verify_id, verify_to, n_opt->count() > 0, verify_n,
                              format, quiet);
        }
        if (conjecture_cmd->parsed())
            return run_conjecture(parse_family(family_text, modulus), stat_name,
                                  max_index, format, quiet, strict);
        if (series_cmd->parsed())
            return run_series(series_k, series_n_max, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

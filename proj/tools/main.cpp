// Command line surface for the growth-constrained code family and its
// Catalan companions: exact counting, enumeration, cross-family conversion,
// rank/unrank, uniform sampling, the reserve-account simulation and
// trajectory rendering.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ballot/bijections.hpp"
#include "ballot/counting.hpp"
#include "ballot/dynamics.hpp"
#include "ballot/enumeration.hpp"
#include "ballot/textio.hpp"

namespace {

using ballot::Family;
using ballot::FamilyObject;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitResource = 3;

enum class OutputFormat { text, structured };

std::uint64_t parse_seed(const std::string& text) {
    try {
        return std::stoull(text, nullptr, 0);  // base 0: decimal or 0x-hex
    } catch (const std::exception&) {
        throw CLI::ValidationError("--seed", "not a decimal or hex integer: " + text);
    }
}

void emit_object(const FamilyObject& s, OutputFormat format) {
    if (format == OutputFormat::text) {
        std::cout << ballot::to_text(s) << '\n';
        return;
    }
    json record = {{"type", ballot::family_name(ballot::family_of(s))},
                   {"n", ballot::object_size(s)},
                   {"payload", ballot::to_text(s)}};
    std::cout << record.dump() << '\n';
}

void emit_value(const std::string& name, const std::string& value, OutputFormat format) {
    if (format == OutputFormat::text) {
        std::cout << value << '\n';
    } else {
        std::cout << json{{"name", name}, {"value", value}}.dump() << '\n';
    }
}

std::string rational_text(const mpq_class& q) {
    return q.get_str();
}

void print_stats(const ballot::StatsReport& report, OutputFormat format) {
    const bool exact = report.source == ballot::StatsReport::Source::exact;
    if (format == OutputFormat::text) {
        std::cout << "n " << report.n << '\n';
        std::cout << "source " << (exact ? "exact" : "monte-carlo") << '\n';
        if (!exact) {
            std::cout << "seed " << report.seed << '\n';
            std::cout << "samples " << report.samples << '\n';
        }
        for (std::size_t j = 0; j < report.final_distribution.size(); ++j) {
            std::cout << "p_final_" << j << ' ' << rational_text(report.final_distribution[j])
                      << '\n';
        }
        std::cout << "expected_final " << rational_text(report.expected_final) << '\n';
        std::cout << "expected_withdrawn " << rational_text(report.expected_withdrawn) << '\n';
        return;
    }
    emit_value("n", std::to_string(report.n), format);
    emit_value("source", exact ? "exact" : "monte-carlo", format);
    if (!exact) {
        emit_value("seed", std::to_string(report.seed), format);
        emit_value("samples", std::to_string(report.samples), format);
    }
    for (std::size_t j = 0; j < report.final_distribution.size(); ++j) {
        emit_value("p_final_" + std::to_string(j),
                   rational_text(report.final_distribution[j]), format);
    }
    emit_value("expected_final", rational_text(report.expected_final), format);
    emit_value("expected_withdrawn", rational_text(report.expected_withdrawn), format);
}

void run_table(const std::string& kind, unsigned n, OutputFormat format) {
    if (kind == "ballot") {
        ballot::BallotTable table(n);
        for (unsigned row = 0; row <= n; ++row) {
            if (format == OutputFormat::structured) {
                json values = json::array();
                for (unsigned k = 0; k <= row; ++k) values.push_back(table.at(row, k).get_str());
                std::cout << json{{"row", row}, {"values", values}}.dump() << '\n';
                continue;
            }
            std::cout << row << ':';
            for (unsigned k = 0; k <= row; ++k) std::cout << ' ' << table.at(row, k).get_str();
            std::cout << '\n';
        }
    } else {
        ballot::SubdiagonalTable table(n);
        for (unsigned row = 1; row <= n; ++row) {
            if (format == OutputFormat::structured) {
                json values = json::array();
                for (unsigned c = 1; c <= table.cols(); ++c)
                    values.push_back(table.at(row, c).get_str());
                std::cout << json{{"row", row}, {"values", values}}.dump() << '\n';
                continue;
            }
            std::cout << row << ':';
            for (unsigned c = 1; c <= table.cols(); ++c)
                std::cout << ' ' << table.at(row, c).get_str();
            std::cout << '\n';
        }
    }
}

void run_verify(Family family, unsigned n, OutputFormat format) {
    const ballot::TheoremReport report = ballot::verify_theorem1(ballot::codec_for(family), n);
    auto field = [&](const std::string& name, const std::string& value) {
        if (format == OutputFormat::text) {
            std::cout << name << ' ' << value << '\n';
        } else {
            emit_value(name, value, format);
        }
    };
    auto line = [&](const std::string& name, bool ok) { field(name, ok ? "pass" : "fail"); };
    field("family", ballot::family_name(report.family));
    field("n", std::to_string(report.n));
    field("objects_checked", std::to_string(report.objects_checked));
    line("condition1_derive_size", report.derive_size_ok);
    line("condition2_pair_injective", report.pair_injective);
    line("chi_injective", report.chi_injective);
    line("image_is_code_set", report.image_is_code_set);
    line("all", report.all_pass());
    for (const auto& cx : report.counterexamples) {
        field("counterexample", cx);
    }
}

int dispatch(CLI::App& app, int argc, char** argv) {
    OutputFormat format = OutputFormat::text;
    app.add_option("--format", format, "Output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, OutputFormat>{{"text", OutputFormat::text},
                                                {"structured", OutputFormat::structured}}));
    app.require_subcommand(1);

    unsigned n = 0;
    std::string family_name = "code";
    std::string from_name, to_name;
    std::string kind = "ballot";
    std::string seed_text = "0";
    std::string rank_text;
    std::uint64_t count = 1;
    std::uint64_t samples = 0;
    long long limit = -1;
    bool exact = false;
    std::string render_format = "ascii";

    auto* cmd_count = app.add_subcommand("count", "Print the exact number of size-n objects");
    cmd_count->add_option("--n", n)->required();

    auto* cmd_table = app.add_subcommand("table", "Print a counting table");
    cmd_table->add_option("--n", n)->required();
    cmd_table->add_option("--kind", kind)
        ->check(CLI::IsMember({"ballot", "subdiagonal"}));

    auto* cmd_enum = app.add_subcommand("enumerate", "Stream all size-n objects of a family");
    cmd_enum->add_option("--n", n)->required();
    cmd_enum->add_option("--family", family_name)
        ->check(CLI::IsMember({"code", "dyck", "perm", "tableau"}));
    cmd_enum->add_option("--limit", limit);

    auto* cmd_convert = app.add_subcommand("convert", "Convert stdin lines between families");
    cmd_convert->add_option("--from", from_name)->required()
        ->check(CLI::IsMember({"code", "dyck", "perm", "tableau"}));
    cmd_convert->add_option("--to", to_name)->required()
        ->check(CLI::IsMember({"code", "dyck", "perm", "tableau"}));

    auto* cmd_rank = app.add_subcommand("rank", "Print the lexicographic rank of each stdin code");

    auto* cmd_unrank = app.add_subcommand("unrank", "Print the code of given length and rank");
    cmd_unrank->add_option("--n", n)->required();
    cmd_unrank->add_option("--r", rank_text)->required();

    auto* cmd_sample = app.add_subcommand("sample", "Draw uniform random codes");
    cmd_sample->add_option("--n", n)->required();
    cmd_sample->add_option("--seed", seed_text);
    cmd_sample->add_option("--count", count);

    auto* cmd_simulate = app.add_subcommand("simulate", "Reserve-account statistics");
    cmd_simulate->add_option("--n", n)->required();
    cmd_simulate->add_flag("--exact", exact);
    cmd_simulate->add_option("--samples", samples);
    cmd_simulate->add_option("--seed", seed_text);

    auto* cmd_verify = app.add_subcommand("verify", "Exhaustively check a family codec");
    cmd_verify->add_option("--family", family_name)->required()
        ->check(CLI::IsMember({"code", "dyck", "perm", "tableau"}));
    cmd_verify->add_option("--n", n)->required();

    auto* cmd_render = app.add_subcommand("render", "Plot a code or trajectory from stdin");
    cmd_render->add_option("--format", render_format)
        ->check(CLI::IsMember({"ascii", "svg"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (cmd_count->parsed()) {
        emit_value("catalan", ballot::catalan(n).get_str(), format);
    } else if (cmd_table->parsed()) {
        run_table(kind, n, format);
    } else if (cmd_enum->parsed()) {
        const Family family = ballot::family_from_name(family_name);
        long long emitted = 0;
        ballot::for_each_code(n, [&](const ballot::Code& c) {
            if (limit >= 0 && emitted >= limit) return;
            emit_object(ballot::chi_decode(c, family), format);
            ++emitted;
        });
    } else if (cmd_convert->parsed()) {
        const Family from = ballot::family_from_name(from_name);
        const Family to = ballot::family_from_name(to_name);
        std::string line;
        while (std::getline(std::cin, line)) {
            emit_object(ballot::convert(ballot::parse_family_object(line, from), to), format);
        }
    } else if (cmd_rank->parsed()) {
        std::string line;
        while (std::getline(std::cin, line)) {
            emit_value("rank", ballot::rank_code(ballot::parse_code(line)).get_str(), format);
        }
    } else if (cmd_unrank->parsed()) {
        emit_object(ballot::unrank_code(n, mpz_class(rank_text)), format);
    } else if (cmd_sample->parsed()) {
        ballot::CodeSampler sampler(n, parse_seed(seed_text));
        for (std::uint64_t i = 0; i < count; ++i) {
            emit_object(sampler.next(), format);
        }
    } else if (cmd_simulate->parsed()) {
        if (exact == (samples > 0)) {
            std::cerr << "simulate needs exactly one of --exact or --samples\n";
            return kExitUsage;
        }
        const ballot::StatsReport report =
            exact ? ballot::exact_stats(n)
                  : ballot::monte_carlo_stats(n, samples, parse_seed(seed_text));
        print_stats(report, format);
    } else if (cmd_verify->parsed()) {
        run_verify(ballot::family_from_name(family_name), n, format);
    } else if (cmd_render->parsed()) {
        const ballot::RenderFormat rf =
            render_format == "svg" ? ballot::RenderFormat::svg : ballot::RenderFormat::ascii;
        std::string line;
        while (std::getline(std::cin, line)) {
            // A leading 0 marks a trajectory; codes start with 1.
            const ballot::Trajectory t =
                !line.empty() && line[0] == '0'
                    ? ballot::parse_trajectory(line)
                    : ballot::trajectory_from_code(ballot::parse_code(line));
            std::cout << ballot::render_trajectory(t, rf);
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Growth-constrained codes and their Catalan companion structures"};
    try {
        return dispatch(app, argc, argv);
    } catch (const ballot::resource_error& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return kExitResource;
    } catch (const ballot::validation_error& e) {
        std::cerr << e.what() << '\n';
        return kExitBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

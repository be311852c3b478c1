#include "ballot/dynamics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ballot/counting.hpp"
#include "ballot/enumeration.hpp"

namespace ballot {

Trajectory trajectory_from_code(const Code& c) {
    if (c.empty()) {
        throw validation_error("EmptyCode", "no trajectory for the void code");
    }
    std::vector<int> reserve;
    reserve.reserve(c.size());
    for (int a : c.values()) reserve.push_back(a - 1);
    return Trajectory(std::move(reserve));
}

Code code_from_trajectory(const Trajectory& t) {
    if (t.empty()) {
        throw validation_error("EmptyTrajectory", "no code for the empty trajectory");
    }
    std::vector<int> values;
    values.reserve(t.size());
    for (int r : t.reserve()) values.push_back(r + 1);
    return Code(std::move(values));
}

int WithdrawalSchedule::total() const {
    return std::accumulate(amounts.begin(), amounts.end(), 0);
}

WithdrawalSchedule withdrawals(const Trajectory& t) {
    WithdrawalSchedule schedule;
    schedule.amounts.reserve(t.size() > 0 ? t.size() - 1 : 0);
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
        // Deposit one unit, then withdraw down to the next balance.
        schedule.amounts.push_back(t[i] + 1 - t[i + 1]);
    }
    return schedule;
}

namespace {

StatsReport report_from_counts(unsigned n, const std::vector<mpz_class>& final_counts,
                               const mpz_class& total) {
    StatsReport report;
    report.n = n;
    mpq_class expected_final = 0;
    for (std::size_t j = 0; j < final_counts.size(); ++j) {
        mpq_class p(final_counts[j], total);
        p.canonicalize();
        report.final_distribution.push_back(p);
        expected_final += p * static_cast<int>(j);
    }
    report.expected_final = expected_final;
    report.expected_withdrawn = mpq_class(static_cast<int>(n) - 1) - expected_final;
    return report;
}

}  // namespace

StatsReport exact_stats(unsigned n) {
    if (catalan(n) > kEnumMaterializeLimit) {
        throw resource_error("exact_stats over catalan(" + std::to_string(n) +
                             ") configurations exceeds the enumeration bound");
    }
    std::vector<mpz_class> final_counts(n, mpz_class(0));
    mpz_class total = 0;
    for_each_code(n, [&](const Code& c) {
        final_counts[static_cast<std::size_t>(c.last() - 1)] += 1;
        total += 1;
    });
    StatsReport report = report_from_counts(n, final_counts, total);
    report.source = StatsReport::Source::exact;
    return report;
}

StatsReport monte_carlo_stats(unsigned n, std::uint64_t samples, std::uint64_t seed) {
    std::vector<mpz_class> final_counts(n, mpz_class(0));
    CodeSampler sampler(n, seed);
    for (std::uint64_t i = 0; i < samples; ++i) {
        final_counts[static_cast<std::size_t>(sampler.next().last() - 1)] += 1;
    }
    StatsReport report = report_from_counts(n, final_counts, mpz_class(samples));
    report.source = StatsReport::Source::monte_carlo;
    report.seed = seed;
    report.samples = samples;
    return report;
}

namespace {

std::string render_ascii(const Trajectory& t) {
    const int top = *std::max_element(t.reserve().begin(), t.reserve().end());
    std::ostringstream out;
    for (int level = top; level >= 0; --level) {
        std::string line;
        for (std::size_t i = 0; i < t.size(); ++i) {
            line += t[i] == level ? '#' : ' ';
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << '\n';
    }
    return out.str();
}

std::string render_svg(const Trajectory& t) {
    constexpr int cell = 20;
    constexpr int margin = 10;
    const int top = *std::max_element(t.reserve().begin(), t.reserve().end());
    const int width = 2 * margin + cell * static_cast<int>(t.size());
    const int height = 2 * margin + cell * (top + 1);
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\">\n";
    out << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < t.size(); ++i) {
        const int x0 = margin + cell * static_cast<int>(i);
        const int y = margin + cell * (top - t[i]) + cell / 2;
        if (i > 0) out << ' ';
        out << x0 << ',' << y << ' ' << (x0 + cell) << ',' << y;
    }
    out << "\"/>\n</svg>\n";
    return out.str();
}

}  // namespace

std::string render_trajectory(const Trajectory& t, RenderFormat format) {
    if (t.empty()) {
        throw validation_error("EmptyTrajectory", "nothing to render");
    }
    switch (format) {
        case RenderFormat::ascii: return render_ascii(t);
        case RenderFormat::svg: return render_svg(t);
    }
    throw validation_error("UnknownFormat", "unsupported render format");
}

}  // namespace ballot

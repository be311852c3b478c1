#include <map>
#include <set>
#include <string>
#include <vector>

#include <doctest.h>

#include "ballot/counting.hpp"
#include "ballot/enumeration.hpp"
#include "ballot/textio.hpp"

using namespace ballot;

TEST_CASE("the fourteen codes of length four, in order") {
    const std::vector<std::string> expected{"1111", "1112", "1121", "1122", "1123",
                                            "1211", "1212", "1221", "1222", "1223",
                                            "1231", "1232", "1233", "1234"};
    std::vector<std::string> got;
    for (const Code& c : enum_codes(4)) got.push_back(to_text(c));
    CHECK(got == expected);

    CHECK(enum_codes(0) == std::vector<Code>{Code()});
    CHECK(enum_codes(1) == std::vector<Code>{Code({1})});
}

TEST_CASE("enumeration is lexicographic, complete and duplicate-free") {
    for (unsigned n = 0; n <= 12; n += 4) {
        const auto codes = enum_codes(n);
        CHECK(mpz_class(codes.size()) == catalan(n));
        for (std::size_t i = 0; i + 1 < codes.size(); ++i) {
            CHECK(codes[i] < codes[i + 1]);
        }
    }
}

TEST_CASE("extension table") {
    ExtensionTable table(6, 7);
    CHECK(table.count(0, 5) == 1);
    CHECK(table.count(1, 2) == 3);
    CHECK(table.count(3, 1) == 14);
    for (unsigned n = 1; n <= 6; ++n) {
        CHECK(table.count(n - 1, 1) == catalan(n));
    }
    // defining recurrence
    for (unsigned m = 1; m <= 6; ++m) {
        for (unsigned v = 1; v + 1 <= 7; ++v) {
            mpz_class sum = 0;
            for (unsigned u = 1; u <= v + 1; ++u) sum += table.count(m - 1, u);
            CHECK(table.count(m, v) == sum);
        }
    }
}

TEST_CASE("rank examples") {
    CHECK(rank_code(parse_code("1111")) == 0);
    CHECK(rank_code(parse_code("1234")) == 13);
    CHECK(rank_code(parse_code("1211")) == 5);
    CHECK(rank_code(Code()) == 0);
}

TEST_CASE("unrank examples") {
    CHECK(to_text(unrank_code(4, 4)) == "1123");
    CHECK(to_text(unrank_code(4, 0)) == "1111");
    CHECK(to_text(unrank_code(5, 41)) == "12345");
    CHECK_THROWS_AS(unrank_code(4, 14), validation_error);
    CHECK_THROWS_AS(unrank_code(4, -1), validation_error);
}

TEST_CASE("rank and unrank are mutually inverse, exhaustive n <= 10") {
    for (unsigned n = 0; n <= 10; n += 5) {
        mpz_class r = 0;
        for (const Code& c : enum_codes(n)) {
            CHECK(rank_code(c) == r);
            CHECK(unrank_code(n, r) == c);
            r += 1;
        }
    }
}

TEST_CASE("sampler determinism and validity") {
    CHECK(to_text(sample_code(1, 12345)) == "1");
    CHECK(sample_code(5, 42) == sample_code(5, 42));

    CodeSampler a(6, 99), b(6, 99);
    for (int i = 0; i < 50; ++i) {
        const Code ca = a.next();
        CHECK(ca == b.next());
        CHECK(ca.size() == 6);
    }
}

TEST_CASE("sampler is uniform: chi-square at n in {4, 5, 6}") {
    // 99.9th percentile thresholds of chi-square with C_n - 1 dof
    const std::map<unsigned, std::pair<std::uint64_t, double>> runs{
        {4, {14000, 34.53}},   // df 13
        {5, {42000, 74.745}},  // df 41
        {6, {66000, 186.76}},  // df 131
    };
    for (const auto& [n, params] : runs) {
        const auto [samples, threshold] = params;
        CodeSampler sampler(n, 20260823);
        std::map<std::string, std::uint64_t> observed;
        for (std::uint64_t i = 0; i < samples; ++i) {
            ++observed[to_text(sampler.next())];
        }
        const auto codes = enum_codes(n);
        const double expected = static_cast<double>(samples) / codes.size();
        double statistic = 0;
        for (const Code& c : codes) {
            const double diff = observed[to_text(c)] - expected;
            statistic += diff * diff / expected;
        }
        INFO("n = ", n, " chi2 = ", statistic);
        CHECK(statistic < threshold);
    }
}

TEST_CASE("avoiding-permutation oracle counts match the Catalan sequence") {
    const std::vector<std::size_t> expected{1, 1, 2, 5, 14, 42, 132, 429, 1430};
    for (unsigned n = 0; n < expected.size(); ++n) {
        CHECK(enum_avoiding_perms(n).size() == expected[n]);
    }
    CHECK(enum_avoiding_perms(0).front().empty());
    CHECK_THROWS_AS(enum_avoiding_perms(10), validation_error);
}

TEST_CASE("last-letter histogram over codes equals the ballot rows, n <= 8") {
    BallotTable table(8);
    for (unsigned n = 1; n <= 8; ++n) {
        std::vector<mpz_class> histogram(n + 1, mpz_class(0));
        for_each_code(n, [&](const Code& c) { histogram[c.last()] += 1; });
        for (unsigned k = 0; k <= n; ++k) {
            CHECK(histogram[k] == table.at(n, k));
        }
    }
}

TEST_CASE("independent family enumerators agree on counts") {
    for (unsigned n = 0; n <= 7; ++n) {
        const auto c = catalan(n);
        CHECK(mpz_class(enum_dyck_words(n).size()) == c);
        CHECK(mpz_class(enum_two_row_tableaux(n).size()) == c);
        if (n <= 8) CHECK(mpz_class(enum_avoiding_perms(n).size()) == c);
    }
}

TEST_CASE("materialization bound is enforced") {
    CHECK_THROWS_AS(enum_codes(20), resource_error);  // C_20 = 6564120420
}

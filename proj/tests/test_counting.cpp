#include <vector>

#include <doctest.h>

#include "ballot/counting.hpp"

#include "oracles.hpp"

using namespace ballot;

namespace {

std::vector<long> row_as_longs(const BallotTable& table, unsigned n) {
    std::vector<long> out;
    for (const auto& v : table.row(n)) out.push_back(v.get_si());
    return out;
}

}  // namespace

TEST_CASE("catalan numbers") {
    CHECK(catalan(0) == 1);
    CHECK(catalan(7) == 429);
    CHECK(catalan(8) == 1430);
    CHECK(catalan(40) == mpz_class("2622127042276492108820"));  // past 64-bit range
}

TEST_CASE("ballot table reproduces the reference rows") {
    BallotTable table(7);
    CHECK(row_as_longs(table, 0) == std::vector<long>{1});
    CHECK(row_as_longs(table, 1) == std::vector<long>{0, 1});
    CHECK(row_as_longs(table, 2) == std::vector<long>{0, 1, 1});
    CHECK(row_as_longs(table, 3) == std::vector<long>{0, 2, 2, 1});
    CHECK(row_as_longs(table, 4) == std::vector<long>{0, 5, 5, 3, 1});
    CHECK(row_as_longs(table, 5) == std::vector<long>{0, 14, 14, 9, 4, 1});
    CHECK(row_as_longs(table, 6) == std::vector<long>{0, 42, 42, 28, 14, 5, 1});
    CHECK(row_as_longs(table, 7) == std::vector<long>{0, 132, 132, 90, 48, 20, 6, 1});
}

TEST_CASE("ballot table properties up to n = 30") {
    BallotTable table(30);
    for (unsigned n = 1; n <= 30; ++n) {
        mpz_class row_sum = 0;
        for (unsigned k = 0; k <= n; ++k) row_sum += table.at(n, k);
        CHECK(row_sum == catalan(n));
        if (n >= 2) {
            CHECK(table.at(n, 1) == catalan(n - 1));
            CHECK(table.at(n, 2) == catalan(n - 1));
        }
        for (unsigned k = 1; k <= n; ++k) {
            CHECK(ballot_closed(n, k) == table.at(n, k));
        }
        CHECK(table.at(n, n) == 1);
    }
}

TEST_CASE("ballot_closed point values and range errors") {
    CHECK(ballot_closed(4, 1) == 5);
    CHECK(ballot_closed(7, 4) == 48);
    CHECK(ballot_closed(9, 9) == 1);
    CHECK_THROWS_AS(ballot_closed(4, 0), validation_error);
    CHECK_THROWS_AS(ballot_closed(4, 5), validation_error);
}

TEST_CASE("subdiagonal table") {
    SubdiagonalTable table(6);
    // the reference cell: west 9 plus north 5 gives 14
    CHECK(table.at(5, 3) == 9);
    CHECK(table.at(4, 4) == 5);
    CHECK(table.at(5, 4) == 14);
    CHECK(table.row_nonzero(3) == std::vector<mpz_class>{1, 2, 2});
    CHECK(table.row_nonzero(6) == std::vector<mpz_class>{1, 5, 14, 28, 42, 42});
    for (unsigned c = 2; c <= table.cols(); ++c) {
        CHECK(table.at(1, c) == 0);  // zeros above the diagonal
    }

    // mirror property against the ballot rows
    BallotTable ballot_rows(6);
    for (unsigned r = 1; r <= 6; ++r) {
        auto mirror = table.row_nonzero(r);
        for (unsigned k = 1; k <= r; ++k) {
            CHECK(mirror[r - k] == ballot_rows.at(r, k));
        }
    }
}

TEST_CASE("two-row tableau counts") {
    CHECK(two_row_count(1, 1) == 1);
    CHECK(two_row_count(4, 4) == 14);
    CHECK(two_row_count(4, 3) == 14);
    CHECK_THROWS_AS(two_row_count(3, 4), validation_error);
    CHECK_THROWS_AS(two_row_count(3, 0), validation_error);

    for (unsigned l = 1; l <= 15; ++l) {
        CHECK(two_row_count(l, l) == catalan(l));
    }
    for (int l1 = 1; l1 <= 7; ++l1) {
        for (int l2 = 1; l2 <= l1 && l1 + l2 <= 8; ++l2) {
            CHECK(two_row_count(l1, l2) ==
                  mpz_class(static_cast<long>(oracles::standard_fillings(l1, l2))));
        }
    }
}

TEST_CASE("catalan convolution, coefficient form of the generating function") {
    for (unsigned n = 0; n <= 20; ++n) {
        mpz_class sum = 0;
        for (unsigned i = 0; i <= n; ++i) sum += catalan(i) * catalan(n - i);
        CHECK(sum == catalan(n + 1));
    }
}

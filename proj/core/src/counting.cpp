#include "ballot/counting.hpp"

#include <string>

namespace ballot {

namespace {

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Quotient of an exactly divisible product; aborts loudly on a remainder,
// which would mean a broken formula rather than bad input.
mpz_class exact_div(const mpz_class& num, const mpz_class& den) {
    if (mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) == 0) {
        throw validation_error("InexactDivision",
                               num.get_str() + " is not divisible by " + den.get_str());
    }
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

}  // namespace

mpz_class catalan(unsigned n) {
    return exact_div(binomial(2ul * n, n), mpz_class(n + 1));
}

BallotTable::BallotTable(unsigned n_max) : n_max_(n_max), rows_(n_max + 1) {
    rows_[0] = {mpz_class(1)};
    for (unsigned n = 1; n <= n_max; ++n) {
        rows_[n].assign(n + 1, mpz_class(0));
        const auto& prev = rows_[n - 1];
        for (unsigned k = 1; k <= n; ++k) {
            // A code ending in k extends a code ending in j whenever k <= j + 1.
            mpz_class sum = 0;
            for (unsigned j = k > 1 ? k - 1 : 1; j < prev.size(); ++j) {
                sum += prev[j];
            }
            if (n == 1 && k == 1) sum = 1;  // extends the void code
            rows_[n][k] = sum;
        }
    }
}

const mpz_class& BallotTable::at(unsigned n, unsigned k) const {
    return rows_.at(n).at(k);
}

const std::vector<mpz_class>& BallotTable::row(unsigned n) const {
    return rows_.at(n);
}

mpz_class ballot_closed(unsigned n, unsigned k) {
    if (k < 1 || k > n) {
        throw validation_error("OutOfRange",
                               "k = " + std::to_string(k) + " outside 1.." + std::to_string(n));
    }
    return exact_div(binomial(2ul * n - k, n) * k, mpz_class(2ul * n - k));
}

SubdiagonalTable::SubdiagonalTable(unsigned rows) : rows_(rows), cells_(rows) {
    for (unsigned r = 1; r <= rows; ++r) {
        auto& row = cells_[r - 1];
        row.assign(rows + 1, mpz_class(0));
        row[0] = 1;
        for (unsigned c = 2; c <= r; ++c) {
            const mpz_class& west = row[c - 2];
            const mpz_class& north = r >= 2 ? cells_[r - 2][c - 1] : row[c - 1];  // row[c-1] is 0
            row[c - 1] = west + north;
        }
    }
}

const mpz_class& SubdiagonalTable::at(unsigned r, unsigned c) const {
    if (r < 1 || r > rows_ || c < 1 || c > rows_ + 1) {
        throw validation_error("OutOfRange", "cell (" + std::to_string(r) + ", " +
                                                 std::to_string(c) + ")");
    }
    return cells_[r - 1][c - 1];
}

std::vector<mpz_class> SubdiagonalTable::row_nonzero(unsigned r) const {
    std::vector<mpz_class> out;
    for (unsigned c = 1; c <= r; ++c) out.push_back(at(r, c));
    return out;
}

mpz_class two_row_count(unsigned l1, unsigned l2) {
    if (l2 < 1 || l1 < l2) {
        throw validation_error("ShapeNotWeaklyDecreasing",
                               "shape (" + std::to_string(l1) + ", " + std::to_string(l2) + ")");
    }
    return exact_div(binomial(l1 + l2, l1) * (l1 - l2 + 1), mpz_class(l1 + 1));
}

}  // namespace ballot

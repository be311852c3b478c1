#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "ballot/errors.hpp"

namespace ballot {

// n-th Catalan number binom(2n, n) / (n + 1), exact.
mpz_class catalan(unsigned n);

// Triangular table of ballot numbers l(n, k): the number of codes of length
// n whose last letter is k. l(0, 0) = 1, l(n, 0) = 0 for n >= 1, and
// l(n, k) = sum over j >= max(k - 1, 1) of l(n - 1, j). Row sums are the
// Catalan numbers.
class BallotTable {
public:
    explicit BallotTable(unsigned n_max);

    unsigned n_max() const noexcept { return n_max_; }

    // l(n, k) for 0 <= k <= n <= n_max.
    const mpz_class& at(unsigned n, unsigned k) const;

    // Row n as (l(n,0), l(n,1), ..., l(n,n)).
    const std::vector<mpz_class>& row(unsigned n) const;

private:
    unsigned n_max_ = 0;
    std::vector<std::vector<mpz_class>> rows_;
};

// Closed form l(n, k) = k / (2n - k) * binom(2n - k, n), exact integer
// division. Throws validation_error kind OutOfRange unless 1 <= k <= n.
mpz_class ballot_closed(unsigned n, unsigned k);

// Square table built by the local rule West + North = result, seeded from a
// first column of ones; cells strictly above the diagonal are zero. Each
// row's nonzero segment is the mirror image of the matching BallotTable row.
class SubdiagonalTable {
public:
    explicit SubdiagonalTable(unsigned rows);

    unsigned rows() const noexcept { return rows_; }
    unsigned cols() const noexcept { return rows_ + 1; }

    // 1-based row r in 1..rows, 1-based column c in 1..rows+1.
    const mpz_class& at(unsigned r, unsigned c) const;

    // Nonzero segment of row r, i.e. columns 1..r.
    std::vector<mpz_class> row_nonzero(unsigned r) const;

private:
    unsigned rows_ = 0;
    std::vector<std::vector<mpz_class>> cells_;
};

// Number of standard Young tableaux of two-row shape (l1, l2):
// (l1 - l2 + 1) / (l1 + 1) * binom(l1 + l2, l1), exact. Throws
// validation_error kind ShapeNotWeaklyDecreasing unless l1 >= l2 > 0.
mpz_class two_row_count(unsigned l1, unsigned l2);

}  // namespace ballot

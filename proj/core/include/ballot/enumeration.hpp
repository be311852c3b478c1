#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "ballot/code.hpp"
#include "ballot/dyck.hpp"
#include "ballot/errors.hpp"
#include "ballot/permutation.hpp"
#include "ballot/tableau.hpp"

namespace ballot {

// T(m, v): number of valid ways to extend a code by m further letters when
// the current last letter is v. T(0, v) = 1 and
// T(m, v) = sum over u in 1..v+1 of T(m - 1, u); T(n - 1, 1) = C_n.
class ExtensionTable {
public:
    ExtensionTable(unsigned m_max, unsigned v_max);

    unsigned m_max() const noexcept { return m_max_; }
    unsigned v_max() const noexcept { return v_max_; }

    // T(m, v), 0 <= m <= m_max, 1 <= v <= v_max.
    const mpz_class& count(unsigned m, unsigned v) const;

private:
    unsigned m_max_ = 0;
    unsigned v_max_ = 0;
    std::vector<std::vector<mpz_class>> t_;  // t_[m][v-1]
};

// Largest object count enum_codes (and the family enumerators built on it)
// will materialize; use for_each_code to stream past this bound.
inline constexpr std::size_t kEnumMaterializeLimit = 2'000'000;

// All valid codes of length n in strictly increasing lexicographic order;
// the list has exactly catalan(n) elements. Throws resource_error when
// catalan(n) exceeds kEnumMaterializeLimit.
std::vector<Code> enum_codes(unsigned n);

// Streaming variant: visits each code of length n in lexicographic order.
void for_each_code(unsigned n, const std::function<void(const Code&)>& visit);

// 0-based index of c within enum_codes(c.size()), computed from an
// ExtensionTable without enumeration.
mpz_class rank_code(const Code& c);

// Inverse of rank_code. Throws validation_error kind RankOutOfRange unless
// 0 <= rank < catalan(n).
Code unrank_code(unsigned n, const mpz_class& rank);

// Exact-uniform sampler over the codes of length n. Letters are drawn
// sequentially with probability T(m - 1, u) / T(m, v) using integer draws
// from a seeded mt19937_64, so the stream is identical across platforms for
// a fixed (n, seed).
class CodeSampler {
public:
    CodeSampler(unsigned n, std::uint64_t seed);

    Code next();

private:
    mpz_class draw_below(const mpz_class& bound);

    unsigned n_;
    ExtensionTable table_;
    std::mt19937_64 rng_;
};

// Single draw; equals CodeSampler(n, seed).next().
Code sample_code(unsigned n, std::uint64_t seed);

// All 123-avoiding permutations of 1..n, by filtering S_n; count equals
// catalan(n). Throws validation_error kind TooLargeForOracle for n > 9.
std::vector<Permutation> enum_avoiding_perms(unsigned n);

// All Dyck words of semilength n, generated by direct backtracking
// (independent of any code bijection), in lexicographic order with Up < Down.
std::vector<DyckWord> enum_dyck_words(unsigned n);

// All standard tableaux of shape (n, n), generated by direct backtracking
// over placements of 1..2n.
std::vector<TwoRowTableau> enum_two_row_tableaux(unsigned n);

}  // namespace ballot

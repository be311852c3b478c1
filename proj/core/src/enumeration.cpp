#include "ballot/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ballot/counting.hpp"

namespace ballot {

ExtensionTable::ExtensionTable(unsigned m_max, unsigned v_max)
    : m_max_(m_max), v_max_(v_max), t_(m_max + 1) {
    t_[0].assign(v_max, mpz_class(1));
    for (unsigned m = 1; m <= m_max; ++m) {
        t_[m].assign(v_max, mpz_class(0));
        // T(m, v) = T(m, v - 1) + T(m - 1, v + 1), running the prefix sums
        // of the row below; the next letter after v ranges over 1..v+1.
        mpz_class sum = 0;
        for (unsigned v = 1; v <= v_max; ++v) {
            if (v == 1) {
                sum = t_[m - 1][0] + (v_max >= 2 ? t_[m - 1][1] : mpz_class(0));
            } else if (v < v_max) {
                sum += t_[m - 1][v];
            }
            t_[m][v - 1] = sum;
        }
    }
}

const mpz_class& ExtensionTable::count(unsigned m, unsigned v) const {
    return t_.at(m).at(v - 1);
}

namespace {

void walk_codes(unsigned n, std::vector<int>& prefix,
                const std::function<void(const Code&)>& visit) {
    if (prefix.size() == n) {
        visit(Code(prefix));
        return;
    }
    const int limit = prefix.empty() ? 1 : prefix.back() + 1;
    for (int next = 1; next <= limit; ++next) {
        prefix.push_back(next);
        walk_codes(n, prefix, visit);
        prefix.pop_back();
    }
}

}  // namespace

void for_each_code(unsigned n, const std::function<void(const Code&)>& visit) {
    std::vector<int> prefix;
    prefix.reserve(n);
    walk_codes(n, prefix, visit);
}

std::vector<Code> enum_codes(unsigned n) {
    mpz_class total = catalan(n);
    if (total > kEnumMaterializeLimit) {
        throw resource_error("catalan(" + std::to_string(n) + ") = " + total.get_str() +
                             " exceeds the materialization bound; use for_each_code");
    }
    std::vector<Code> out;
    out.reserve(total.get_ui());
    for_each_code(n, [&](const Code& c) { out.push_back(c); });
    return out;
}

mpz_class rank_code(const Code& c) {
    const unsigned n = static_cast<unsigned>(c.size());
    if (n == 0) return 0;
    ExtensionTable table(n, n + 1);
    mpz_class rank = 0;
    for (unsigned i = 1; i <= n; ++i) {
        // Any letter b < a_i is also a legal continuation, so every code
        // starting that way precedes c.
        const unsigned remaining = n - i;
        for (int b = 1; b < c[i - 1]; ++b) {
            rank += table.count(remaining, static_cast<unsigned>(b));
        }
    }
    return rank;
}

Code unrank_code(unsigned n, const mpz_class& rank) {
    if (rank < 0 || rank >= catalan(n)) {
        throw validation_error("RankOutOfRange",
                               "rank " + rank.get_str() + " outside 0..catalan(" +
                                   std::to_string(n) + ")-1");
    }
    if (n == 0) return Code();
    ExtensionTable table(n, n + 1);
    std::vector<int> values;
    values.reserve(n);
    mpz_class r = rank;
    int last = 0;
    for (unsigned i = 1; i <= n; ++i) {
        const unsigned remaining = n - i;
        int chosen = 0;
        for (int b = 1; b <= last + 1; ++b) {
            const mpz_class& block = table.count(remaining, static_cast<unsigned>(b));
            if (r < block) {
                chosen = b;
                break;
            }
            r -= block;
        }
        values.push_back(chosen);
        last = chosen;
    }
    return Code(std::move(values));
}

CodeSampler::CodeSampler(unsigned n, std::uint64_t seed)
    : n_(n), table_(n, n + 1), rng_(seed) {}

mpz_class CodeSampler::draw_below(const mpz_class& bound) {
    if (bound <= 1) return 0;
    const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    const std::size_t words = (bits + 63) / 64;
    // Rejection from [0, 2^bits); acceptance probability is at least 1/2.
    while (true) {
        mpz_class x = 0;
        for (std::size_t w = 0; w < words; ++w) {
            x <<= 64;
            x += mpz_class(static_cast<unsigned long>(rng_()));
        }
        mpz_class mask = (mpz_class(1) << bits) - 1;
        x &= mask;
        if (x < bound) return x;
    }
}

Code CodeSampler::next() {
    std::vector<int> values;
    values.reserve(n_);
    if (n_ == 0) return Code();
    values.push_back(1);
    int last = 1;
    for (unsigned i = 2; i <= n_; ++i) {
        const unsigned remaining = n_ - i + 1;  // letters still to place, this one included
        mpz_class r = draw_below(table_.count(remaining, static_cast<unsigned>(last)));
        int chosen = last + 1;
        for (int u = 1; u <= last + 1; ++u) {
            const mpz_class& block = table_.count(remaining - 1, static_cast<unsigned>(u));
            if (r < block) {
                chosen = u;
                break;
            }
            r -= block;
        }
        values.push_back(chosen);
        last = chosen;
    }
    return Code(std::move(values));
}

Code sample_code(unsigned n, std::uint64_t seed) {
    return CodeSampler(n, seed).next();
}

std::vector<Permutation> enum_avoiding_perms(unsigned n) {
    if (n > 9) {
        throw validation_error("TooLargeForOracle",
                               "the S_n filter oracle is bounded at n = 9, got " +
                                   std::to_string(n));
    }
    std::vector<Permutation> out;
    std::vector<int> image(n);
    std::iota(image.begin(), image.end(), 1);
    do {
        Permutation p(image);
        if (is_123_avoiding(p)) out.push_back(std::move(p));
    } while (std::next_permutation(image.begin(), image.end()));
    return out;
}

namespace {

void walk_dyck(unsigned n, int ups, int downs, std::vector<Step>& prefix,
               std::vector<DyckWord>& out) {
    if (prefix.size() == 2 * n) {
        out.emplace_back(prefix);
        return;
    }
    if (ups < static_cast<int>(n)) {
        prefix.push_back(Step::Up);
        walk_dyck(n, ups + 1, downs, prefix, out);
        prefix.pop_back();
    }
    if (downs < ups) {
        prefix.push_back(Step::Down);
        walk_dyck(n, ups, downs + 1, prefix, out);
        prefix.pop_back();
    }
}

void walk_tableaux(unsigned n, std::vector<int>& row1, std::vector<int>& row2,
                   std::vector<TwoRowTableau>& out) {
    const int next = static_cast<int>(row1.size() + row2.size()) + 1;
    if (next > static_cast<int>(2 * n)) {
        out.emplace_back(row1, row2);
        return;
    }
    if (row1.size() < n) {
        row1.push_back(next);
        walk_tableaux(n, row1, row2, out);
        row1.pop_back();
    }
    if (row2.size() < row1.size()) {
        row2.push_back(next);
        walk_tableaux(n, row1, row2, out);
        row2.pop_back();
    }
}

}  // namespace

std::vector<DyckWord> enum_dyck_words(unsigned n) {
    std::vector<DyckWord> out;
    std::vector<Step> prefix;
    prefix.reserve(2 * n);
    walk_dyck(n, 0, 0, prefix, out);
    return out;
}

std::vector<TwoRowTableau> enum_two_row_tableaux(unsigned n) {
    std::vector<TwoRowTableau> out;
    std::vector<int> row1, row2;
    walk_tableaux(n, row1, row2, out);
    return out;
}

}  // namespace ballot

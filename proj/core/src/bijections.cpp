#include "ballot/bijections.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "ballot/enumeration.hpp"
#include "ballot/textio.hpp"

namespace ballot {

const char* family_name(Family f) {
    switch (f) {
        case Family::code: return "code";
        case Family::dyck: return "dyck";
        case Family::perm: return "perm";
        case Family::tableau: return "tableau";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    if (name == "code") return Family::code;
    if (name == "dyck") return Family::dyck;
    if (name == "perm") return Family::perm;
    if (name == "tableau") return Family::tableau;
    throw validation_error("UnknownFamily", "no family named '" + name + "'");
}

Family family_of(const FamilyObject& s) {
    return static_cast<Family>(s.index());
}

std::size_t object_size(const FamilyObject& s) {
    return std::visit(
        [](const auto& v) -> std::size_t {
            if constexpr (std::is_same_v<std::decay_t<decltype(v)>, DyckWord>) {
                return v.semilength();
            } else {
                return v.size();
            }
        },
        s);
}

namespace {

[[noreturn]] void codec_violation(const std::string& what) {
    throw validation_error("CodecViolation", what);
}

// ---- codes: chi is the identity ----------------------------------------

class CodeCodec final : public FamilyCodec {
public:
    Family family() const override { return Family::code; }
    FamilyObject empty_object() const override { return Code(); }
    std::size_t size(const FamilyObject& s) const override {
        return std::get<Code>(s).size();
    }
    FamilyObject derive(const FamilyObject& s) const override {
        auto values = std::get<Code>(s).values();
        if (values.empty()) codec_violation("derive on the void code");
        values.pop_back();
        return Code(std::move(values));
    }
    int statistic(const FamilyObject& s) const override {
        return std::get<Code>(s).last();
    }
    FamilyObject grow(const FamilyObject& s, int k) const override {
        auto values = std::get<Code>(s).values();
        const int limit = values.empty() ? 1 : values.back() + 1;
        if (k < 1 || k > limit) codec_violation("cannot append letter " + std::to_string(k));
        values.push_back(k);
        return Code(std::move(values));
    }
};

// ---- Dyck words: statistic = trailing descents --------------------------
//
// chi(w) is the sequence of heights of Up-step endpoints: the first height
// is 1 and consecutive heights rise by at most one, so chi(w) is a code.

class DyckCodec final : public FamilyCodec {
public:
    Family family() const override { return Family::dyck; }
    FamilyObject empty_object() const override { return DyckWord(); }
    std::size_t size(const FamilyObject& s) const override {
        return std::get<DyckWord>(s).semilength();
    }
    FamilyObject derive(const FamilyObject& s) const override {
        const auto& w = std::get<DyckWord>(s);
        if (w.empty()) codec_violation("derive on the empty word");
        // Delete the last Up and everything after it, then close the path
        // with Down letters.
        const auto& letters = w.letters();
        std::size_t last_up = letters.size();
        while (last_up > 0 && letters[last_up - 1] == Step::Down) --last_up;
        std::vector<Step> shorter(letters.begin(), letters.begin() + (last_up - 1));
        int height = 0;
        for (Step st : shorter) height += st == Step::Up ? 1 : -1;
        shorter.insert(shorter.end(), static_cast<std::size_t>(height), Step::Down);
        return DyckWord(std::move(shorter));
    }
    int statistic(const FamilyObject& s) const override {
        return std::get<DyckWord>(s).trailing_descents();
    }
    FamilyObject grow(const FamilyObject& s, int k) const override {
        const auto& w = std::get<DyckWord>(s);
        const int d = w.empty() ? 0 : w.trailing_descents();
        if (k < 1 || k > d + 1) codec_violation("cannot grow to endpoint height " + std::to_string(k));
        // Strip the closing descent, glide down to height k - 1, take one
        // Up step to height k, then close.
        std::vector<Step> letters(w.letters().begin(), w.letters().end() - d);
        letters.insert(letters.end(), static_cast<std::size_t>(d - k + 1), Step::Down);
        letters.push_back(Step::Up);
        letters.insert(letters.end(), static_cast<std::size_t>(k), Step::Down);
        return DyckWord(std::move(letters));
    }
};

// ---- permutations: statistic = decreasing prefix ------------------------
//
// derive deletes the value n (keeping 123-avoidance); grow inserts n + 1
// either at the front (k = prefix + 1) or just after the k-th letter of the
// maximal decreasing prefix (k <= prefix).

class PermCodec final : public FamilyCodec {
public:
    Family family() const override { return Family::perm; }
    FamilyObject empty_object() const override { return Permutation(); }
    std::size_t size(const FamilyObject& s) const override {
        return std::get<Permutation>(s).size();
    }
    FamilyObject derive(const FamilyObject& s) const override {
        const auto& p = std::get<Permutation>(s);
        if (p.empty()) codec_violation("derive on the empty permutation");
        const int n = static_cast<int>(p.size());
        std::vector<int> image;
        image.reserve(p.size() - 1);
        for (int v : p.image()) {
            if (v != n) image.push_back(v);
        }
        return Permutation(std::move(image));
    }
    int statistic(const FamilyObject& s) const override {
        return decreasing_prefix(std::get<Permutation>(s));
    }
    FamilyObject grow(const FamilyObject& s, int k) const override {
        const auto& p = std::get<Permutation>(s);
        const int prefix = decreasing_prefix(p);
        if (k < 1 || k > prefix + 1) codec_violation("cannot grow with statistic " + std::to_string(k));
        std::vector<int> image = p.image();
        const int pos = k == prefix + 1 ? 0 : k;  // 0-based insertion index
        image.insert(image.begin() + pos, static_cast<int>(p.size()) + 1);
        return Permutation(std::move(image));
    }
};

// ---- tableaux: through the Dyck view ------------------------------------
//
// row1 holds the positions of the Up letters and row2 the positions of the
// Down letters; tableau h equals the Dyck trailing-descent statistic.

DyckWord tableau_to_dyck(const TwoRowTableau& t) {
    std::vector<Step> letters(2 * t.size(), Step::Down);
    for (int pos : t.row1()) letters[pos - 1] = Step::Up;
    return DyckWord(std::move(letters));
}

TwoRowTableau dyck_to_tableau(const DyckWord& w) {
    std::vector<int> row1, row2;
    const auto& letters = w.letters();
    for (std::size_t i = 0; i < letters.size(); ++i) {
        (letters[i] == Step::Up ? row1 : row2).push_back(static_cast<int>(i + 1));
    }
    return TwoRowTableau(std::move(row1), std::move(row2));
}

class TableauCodec final : public FamilyCodec {
public:
    Family family() const override { return Family::tableau; }
    FamilyObject empty_object() const override { return TwoRowTableau(); }
    std::size_t size(const FamilyObject& s) const override {
        return std::get<TwoRowTableau>(s).size();
    }
    FamilyObject derive(const FamilyObject& s) const override {
        FamilyObject w = tableau_to_dyck(std::get<TwoRowTableau>(s));
        return dyck_to_tableau(std::get<DyckWord>(dyck_.derive(w)));
    }
    int statistic(const FamilyObject& s) const override {
        return std::get<TwoRowTableau>(s).h();
    }
    FamilyObject grow(const FamilyObject& s, int k) const override {
        FamilyObject w = tableau_to_dyck(std::get<TwoRowTableau>(s));
        return dyck_to_tableau(std::get<DyckWord>(dyck_.grow(w, k)));
    }

private:
    DyckCodec dyck_;
};

}  // namespace

const FamilyCodec& codec_for(Family f) {
    static const CodeCodec code_codec;
    static const DyckCodec dyck_codec;
    static const PermCodec perm_codec;
    static const TableauCodec tableau_codec;
    switch (f) {
        case Family::code: return code_codec;
        case Family::dyck: return dyck_codec;
        case Family::perm: return perm_codec;
        case Family::tableau: return tableau_codec;
    }
    throw validation_error("UnknownFamily", "bad family tag");
}

Code chi_encode(const FamilyObject& s, const FamilyCodec& codec) {
    const std::size_t n = codec.size(s);
    std::vector<int> letters(n);
    FamilyObject cur = s;
    for (std::size_t i = n; i > 0; --i) {
        letters[i - 1] = codec.statistic(cur);
        if (i > 1) {
            FamilyObject d = codec.derive(cur);
            if (codec.size(d) != i - 1) {
                codec_violation("derive did not reduce the size by one");
            }
            cur = std::move(d);
        }
    }
    try {
        return Code(std::move(letters));
    } catch (const validation_error& e) {
        codec_violation(std::string("statistic chain is not a code: ") + e.what());
    }
}

Code chi_encode(const FamilyObject& s) {
    return chi_encode(s, codec_for(family_of(s)));
}

FamilyObject chi_decode(const Code& c, Family family) {
    const FamilyCodec& codec = codec_for(family);
    FamilyObject cur = codec.empty_object();
    for (int k : c.values()) {
        cur = codec.grow(cur, k);
    }
    return cur;
}

FamilyObject convert(const FamilyObject& s, Family to) {
    return chi_decode(chi_encode(s), to);
}

std::vector<FamilyObject> enum_family(unsigned n, Family family) {
    std::vector<FamilyObject> out;
    for (const Code& c : enum_codes(n)) {
        out.push_back(chi_decode(c, family));
    }
    return out;
}

namespace {

std::vector<FamilyObject> independent_enumeration(Family family, unsigned n) {
    std::vector<FamilyObject> out;
    switch (family) {
        case Family::code:
            for (auto& c : enum_codes(n)) out.emplace_back(std::move(c));
            break;
        case Family::dyck:
            for (auto& w : enum_dyck_words(n)) out.emplace_back(std::move(w));
            break;
        case Family::perm:
            for (auto& p : enum_avoiding_perms(n)) out.emplace_back(std::move(p));
            break;
        case Family::tableau:
            for (auto& t : enum_two_row_tableaux(n)) out.emplace_back(std::move(t));
            break;
    }
    return out;
}

}  // namespace

TheoremReport verify_theorem1(const FamilyCodec& codec, unsigned n) {
    TheoremReport report;
    report.family = codec.family();
    report.n = n;

    const std::vector<FamilyObject> objects = independent_enumeration(codec.family(), n);
    report.objects_checked = objects.size();

    std::set<std::string> counterexamples;
    std::map<std::pair<std::string, int>, std::string> pair_seen;
    std::set<std::string> chi_seen;

    for (const FamilyObject& s : objects) {
        const std::string text = to_text(s);
        if (n >= 1) {
            FamilyObject d = codec.derive(s);
            if (codec.size(d) != n - 1) {
                report.derive_size_ok = false;
                counterexamples.insert(text + " (derive size)");
            }
            auto key = std::make_pair(to_text(d), codec.statistic(s));
            auto [it, inserted] = pair_seen.emplace(key, text);
            if (!inserted) {
                report.pair_injective = false;
                counterexamples.insert(text + " collides with " + it->second);
            }
        }
        const std::string chi = to_text(chi_encode(s, codec));
        if (!chi_seen.insert(chi).second) {
            report.chi_injective = false;
            counterexamples.insert(text + " (chi collision on " + chi + ")");
        }
    }

    std::set<std::string> code_set;
    for (const Code& c : enum_codes(n)) code_set.insert(to_text(c));
    if (chi_seen != code_set) {
        report.image_is_code_set = false;
        for (const auto& chi : chi_seen) {
            if (!code_set.contains(chi)) counterexamples.insert("extra image " + chi);
        }
        for (const auto& c : code_set) {
            if (!chi_seen.contains(c)) counterexamples.insert("missed code " + c);
        }
    }

    report.counterexamples.assign(counterexamples.begin(), counterexamples.end());
    return report;
}

}  // namespace ballot

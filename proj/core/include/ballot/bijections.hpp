#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "ballot/code.hpp"
#include "ballot/dyck.hpp"
#include "ballot/errors.hpp"
#include "ballot/permutation.hpp"
#include "ballot/tableau.hpp"

namespace ballot {

enum class Family { code, dyck, perm, tableau };

const char* family_name(Family f);
Family family_from_name(const std::string& name);  // throws UnknownFamily

using FamilyObject = std::variant<Code, DyckWord, Permutation, TwoRowTableau>;

Family family_of(const FamilyObject& s);
std::size_t object_size(const FamilyObject& s);

// Size-reducing derivation d plus integer statistic k for one family.
// Together they assign every object the code
//   chi(s) = (statistic(d^{n-1} s), ..., statistic(d s), statistic(s)),
// and grow() inverts a single derivation step.
class FamilyCodec {
public:
    virtual ~FamilyCodec() = default;

    virtual Family family() const = 0;
    virtual FamilyObject empty_object() const = 0;
    virtual std::size_t size(const FamilyObject& s) const = 0;

    // Object of size n - 1; requires size(s) >= 1.
    virtual FamilyObject derive(const FamilyObject& s) const = 0;

    // The statistic k of s; requires size(s) >= 1.
    virtual int statistic(const FamilyObject& s) const = 0;

    // The unique object of size n + 1 with derive = s and statistic = k.
    // Partial: throws validation_error kind CodecViolation when no such
    // object exists.
    virtual FamilyObject grow(const FamilyObject& s, int k) const = 0;
};

const FamilyCodec& codec_for(Family f);

// The code chi(s). Throws CodecViolation if the codec breaks an invariant
// (derivation chain of the wrong length or a letter sequence that is not a
// valid code) -- that would be an implementation bug, surfaced loudly.
Code chi_encode(const FamilyObject& s, const FamilyCodec& codec);
Code chi_encode(const FamilyObject& s);

// The unique object of the given family with chi = c, built by folding
// grow over the letters of c.
FamilyObject chi_decode(const Code& c, Family family);

// chi_decode(chi_encode(s), to); sizes are preserved.
FamilyObject convert(const FamilyObject& s, Family to);

// Objects of size n of the given family in the code-induced order
// (chi_decode applied to enum_codes(n)).
std::vector<FamilyObject> enum_family(unsigned n, Family family);

// Exhaustive check of the coding framework for one family at size n, over
// an independently enumerated size-n class: (1) derive lands in size n - 1,
// (2) s -> (derive(s), statistic(s)) is injective, chi is injective, and the
// chi image is exactly the set of valid codes of length n. Failures are
// report content, never exceptions; counterexamples are listed in canonical
// text form, sorted.
struct TheoremReport {
    Family family;
    unsigned n = 0;
    std::size_t objects_checked = 0;
    bool derive_size_ok = true;
    bool pair_injective = true;
    bool chi_injective = true;
    bool image_is_code_set = true;
    std::vector<std::string> counterexamples;

    bool all_pass() const {
        return derive_size_ok && pair_injective && chi_injective && image_is_code_set;
    }
};

TheoremReport verify_theorem1(const FamilyCodec& codec, unsigned n);

}  // namespace ballot

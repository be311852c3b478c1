#pragma once

#include <string>

#include "ballot/bijections.hpp"
#include "ballot/code.hpp"
#include "ballot/dyck.hpp"
#include "ballot/errors.hpp"
#include "ballot/permutation.hpp"
#include "ballot/tableau.hpp"
#include "ballot/trajectory.hpp"

namespace ballot {

// Canonical text forms.
//   Code / Trajectory / Permutation: digits concatenated while every entry is
//   a single digit, comma-separated otherwise.
//   DyckWord: 'a' for Up, 'b' for Down; parsing also accepts '('/')' and
//   'U'/'D'.
//   TwoRowTableau: "1 2 4 / 3 5 6" (row1 first).
// Parsing is strict; anything unrecognized raises validation_error with kind
// MalformedInput, and structurally invalid objects raise their validation
// kinds.

std::string to_text(const Code& c);
std::string to_text(const DyckWord& w);
std::string to_text(const Permutation& p);
std::string to_text(const TwoRowTableau& t);
std::string to_text(const Trajectory& t);
std::string to_text(const FamilyObject& s);

Code parse_code(const std::string& text);
DyckWord parse_dyck(const std::string& text);
Permutation parse_permutation(const std::string& text);
TwoRowTableau parse_tableau(const std::string& text);
Trajectory parse_trajectory(const std::string& text);
FamilyObject parse_family_object(const std::string& text, Family family);

}  // namespace ballot

#include "ballot/textio.hpp"

#include <algorithm>
#include <sstream>

namespace ballot {

namespace {

bool all_single_digit(const std::vector<int>& values) {
    return std::all_of(values.begin(), values.end(), [](int v) { return v >= 0 && v <= 9; });
}

std::string int_sequence_to_text(const std::vector<int>& values) {
    std::string out;
    if (all_single_digit(values)) {
        for (int v : values) out += static_cast<char>('0' + v);
    } else {
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i > 0) out += ',';
            out += std::to_string(values[i]);
        }
    }
    return out;
}

int parse_int_strict(const std::string& token) {
    if (token.empty()) {
        throw validation_error("MalformedInput", "empty number");
    }
    for (char ch : token) {
        if (ch < '0' || ch > '9') {
            throw validation_error("MalformedInput", "bad digit in '" + token + "'");
        }
    }
    try {
        return std::stoi(token);
    } catch (const std::exception&) {
        throw validation_error("MalformedInput", "number out of range: '" + token + "'");
    }
}

std::vector<int> parse_int_sequence(const std::string& text) {
    std::vector<int> values;
    if (text.empty()) return values;
    if (text.find(',') != std::string::npos) {
        std::stringstream ss(text);
        std::string token;
        while (std::getline(ss, token, ',')) {
            values.push_back(parse_int_strict(token));
        }
        if (!text.empty() && text.back() == ',') {
            throw validation_error("MalformedInput", "trailing comma");
        }
    } else {
        for (char ch : text) {
            if (ch < '0' || ch > '9') {
                throw validation_error("MalformedInput",
                                       std::string("unexpected character '") + ch + "'");
            }
            values.push_back(ch - '0');
        }
    }
    return values;
}

}  // namespace

std::string to_text(const Code& c) {
    return int_sequence_to_text(c.values());
}

std::string to_text(const DyckWord& w) {
    std::string out;
    for (Step s : w.letters()) out += s == Step::Up ? 'a' : 'b';
    return out;
}

std::string to_text(const Permutation& p) {
    return int_sequence_to_text(p.image());
}

std::string to_text(const TwoRowTableau& t) {
    std::string out;
    for (std::size_t i = 0; i < t.row1().size(); ++i) {
        if (i > 0) out += ' ';
        out += std::to_string(t.row1()[i]);
    }
    out += out.empty() ? "/" : " / ";
    for (std::size_t i = 0; i < t.row2().size(); ++i) {
        if (i > 0) out += ' ';
        out += std::to_string(t.row2()[i]);
    }
    return out;
}

std::string to_text(const Trajectory& t) {
    return int_sequence_to_text(t.reserve());
}

std::string to_text(const FamilyObject& s) {
    return std::visit([](const auto& v) { return to_text(v); }, s);
}

Code parse_code(const std::string& text) {
    return Code(parse_int_sequence(text));
}

DyckWord parse_dyck(const std::string& text) {
    std::vector<Step> letters;
    letters.reserve(text.size());
    for (char ch : text) {
        switch (ch) {
            case 'a': case 'U': case '(':
                letters.push_back(Step::Up);
                break;
            case 'b': case 'D': case ')':
                letters.push_back(Step::Down);
                break;
            default:
                throw validation_error("MalformedInput",
                                       std::string("unexpected letter '") + ch + "'");
        }
    }
    return DyckWord(std::move(letters));
}

Permutation parse_permutation(const std::string& text) {
    return Permutation(parse_int_sequence(text));
}

TwoRowTableau parse_tableau(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        throw validation_error("MalformedInput", "tableau text needs a '/' separator");
    }
    auto parse_row = [](const std::string& part) {
        std::vector<int> row;
        std::stringstream ss(part);
        std::string token;
        while (ss >> token) row.push_back(parse_int_strict(token));
        return row;
    };
    return TwoRowTableau(parse_row(text.substr(0, slash)), parse_row(text.substr(slash + 1)));
}

Trajectory parse_trajectory(const std::string& text) {
    return Trajectory(parse_int_sequence(text));
}

FamilyObject parse_family_object(const std::string& text, Family family) {
    switch (family) {
        case Family::code: return parse_code(text);
        case Family::dyck: return parse_dyck(text);
        case Family::perm: return parse_permutation(text);
        case Family::tableau: return parse_tableau(text);
    }
    throw validation_error("UnknownFamily", "bad family tag");
}

}  // namespace ballot

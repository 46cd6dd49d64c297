#pragma once

#include <string>
#include <vector>

#include "gbc/errors.hpp"

namespace gbc {

// One signed generator letter. sign is +1 or -1.
struct Letter {
    int gen;
    int sign;
    bool operator==(const Letter&) const = default;
};

// A word in the generators and their formal inverses; empty = identity.
using GroupWord = std::vector<Letter>;

inline Letter inverse(Letter l) { return {l.gen, -l.sign}; }

GroupWord inverse(const GroupWord& w);
GroupWord concat(const GroupWord& a, const GroupWord& b);

// Cancel adjacent x x^-1 pairs until none remain. Graph-independent.
GroupWord free_reduce_word(const GroupWord& w);

// Text form: `a2` is generator 2, `A2` its inverse, whitespace-separated.
GroupWord parse_word(const std::string& text);
std::string format_word(const GroupWord& w);

}  // namespace gbc

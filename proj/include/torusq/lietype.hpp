#pragma once

#include <string>

#include "torusq/errors.hpp"

namespace torusq {

// A finite simple type: series letter + rank, e.g. A2, C3, E6, G2.
// Valid ranks: A >= 1, B >= 2, C >= 2, D >= 3, E in {6,7,8}, F = 4, G = 2.
struct LieType {
    char series = 'A';
    int rank = 1;

    bool operator==(const LieType&) const = default;
};

// Throws PreconditionError on an unknown series or an out-of-range rank.
LieType make_lie_type(char series, int rank);

// Accepts "<letter><rank>" with optional lowercase letter, e.g. "A2", "g2".
LieType parse_lie_type(const std::string& s);

std::string to_string(const LieType& t);

// True for the A/D/E series (every root the same length).
bool is_simply_laced(const LieType& t);

} // namespace torusq

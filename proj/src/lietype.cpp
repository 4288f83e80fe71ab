#include "torusq/lietype.hpp"

#include <cctype>
#include <cstdlib>

namespace torusq {

LieType make_lie_type(char series, int rank) {
    char s = static_cast<char>(std::toupper(static_cast<unsigned char>(series)));
    bool ok = false;
    switch (s) {
        case 'A': ok = rank >= 1; break;
        case 'B': ok = rank >= 2; break;
        case 'C': ok = rank >= 2; break;
        case 'D': ok = rank >= 3; break;
        case 'E': ok = rank >= 6 && rank <= 8; break;
        case 'F': ok = rank == 4; break;
        case 'G': ok = rank == 2; break;
        default:
            throw PreconditionError(std::string("unknown series letter '") + series + "'");
    }
    if (!ok)
        throw PreconditionError(std::string("rank ") + std::to_string(rank) +
                                " out of range for series " + s);
    return LieType{s, rank};
}

LieType parse_lie_type(const std::string& s) {
    if (s.size() < 2)
        throw PreconditionError("malformed type '" + s + "' (want e.g. A2, C3, E6)");
    for (size_t k = 1; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k])))
            throw PreconditionError("malformed type '" + s + "' (want e.g. A2, C3, E6)");
    long rank = std::strtol(s.c_str() + 1, nullptr, 10);
    if (rank < 1 || rank > 64)
        throw PreconditionError("malformed type '" + s + "'");
    return make_lie_type(s[0], static_cast<int>(rank));
}

std::string to_string(const LieType& t) {
    return std::string(1, t.series) + std::to_string(t.rank);
}

bool is_simply_laced(const LieType& t) {
    return t.series == 'A' || t.series == 'D' || t.series == 'E';
}

} // namespace torusq

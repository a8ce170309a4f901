#pragma once

#include <orbitope/poly.hpp>

namespace orbitope {

// Equation of the secant hypersurface S_1 of the curve (cos t, sin t, cos 3t,
// sin 3t), in variables (w, x, y, z); the boundary hypersurface of B_4.
inline constexpr const char* kSecantB4Text =
    "-36/1 4 2 2 0\n"
    "24/1 2 4 2 0\n"
    "-4/1 0 6 2 0\n"
    "24/1 5 1 1 1\n"
    "-80/1 3 3 1 1\n"
    "24/1 1 5 1 1\n"
    "-4/1 6 0 0 2\n"
    "24/1 4 2 0 2\n"
    "-36/1 2 4 0 2\n"
    "4/1 6 0 0 0\n"
    "12/1 4 2 0 0\n"
    "12/1 2 4 0 0\n"
    "4/1 0 6 0 0\n"
    "-12/1 5 0 1 0\n"
    "24/1 3 2 1 0\n"
    "36/1 1 4 1 0\n"
    "12/1 4 0 2 0\n"
    "24/1 2 2 2 0\n"
    "12/1 0 4 2 0\n"
    "-4/1 3 0 3 0\n"
    "12/1 1 2 3 0\n"
    "-36/1 4 1 0 1\n"
    "-24/1 2 3 0 1\n"
    "12/1 0 5 0 1\n"
    "-12/1 2 1 2 1\n"
    "4/1 0 3 2 1\n"
    "12/1 4 0 0 2\n"
    "24/1 2 2 0 2\n"
    "12/1 0 4 0 2\n"
    "-4/1 3 0 1 2\n"
    "12/1 1 2 1 2\n"
    "-12/1 2 1 0 3\n"
    "4/1 0 3 0 3\n"
    "-3/1 4 0 0 0\n"
    "-6/1 2 2 0 0\n"
    "-3/1 0 4 0 0\n"
    "8/1 3 0 1 0\n"
    "-24/1 1 2 1 0\n"
    "-6/1 2 0 2 0\n"
    "-6/1 0 2 2 0\n"
    "1/1 0 0 4 0\n"
    "24/1 2 1 0 1\n"
    "-8/1 0 3 0 1\n"
    "-6/1 2 0 0 2\n"
    "-6/1 0 2 0 2\n"
    "2/1 0 0 2 2\n"
    "1/1 0 0 0 4\n";

inline QPoly secant_b4_polynomial() { return parse_text<Rational>(kSecantB4Text, 4); }

}  // namespace orbitope

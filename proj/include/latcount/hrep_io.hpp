#pragma once

#include <string>

#include "latcount/polytope.hpp"

namespace latcount {

struct ParseError : Error {
    using Error::Error;
};

// Matrix H-rep format: first line `m n` with n = d+1; each following row
// `b_i  -a_i1 ... -a_id` encodes b_i - <a_i, x> >= 0, i.e. A x <= b.
// Rational entries are cleared per row by the lcm of the denominators.
HRep parse_hrep(const std::string& text);

std::string render_hrep(const HRep& p);

HRep read_hrep_file(const std::string& path);

}  // namespace latcount

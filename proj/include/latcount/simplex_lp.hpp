#pragma once

#include "latcount/arith.hpp"

namespace latcount {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rat objective;
    RatVec x;
};

// maximize <c, x> subject to G x <= h, x free.
// Two-phase tableau simplex with Bland's rule, exact rational arithmetic.
LpResult solve_lp(const RatMat& g, const RatVec& h, const RatVec& c);

}  // namespace latcount

#pragma once

#include "latcount/decompose.hpp"
#include "latcount/genfun.hpp"
#include "latcount/polytope.hpp"

namespace latcount {

struct EngineResult {
    GenFun genfun;
    DecompStats stats;
};

// Brion aggregation over the vertices of P with the pipeline selected by
// opts.mode. Terms are grouped per vertex. Throws for Mode::Homogenized
// (which produces a cone generating function, not a counting one).
EngineResult genfun_polytope(const HRep& p, const EngineOptions& opts);

Int count_polytope(const HRep& p, const EngineOptions& opts);

// Runs the selected pipeline for its statistics only; no terms are built and
// no parallelepipeds are enumerated. Useful for cone-count comparisons on
// instances whose generating function would be very large.
DecompStats survey_polytope(const HRep& p, const EngineOptions& opts);

// Generating function of the homogenization cone
// C = {(xi x, xi) : x in P, xi >= 0} in d+1 variables.
EngineResult genfun_homogenization(const HRep& p, const Int& max_index);

// Testing oracle: scan the integer bounding box. Guarded at 10^8 points.
Int brute_force_count(const HRep& p);

}  // namespace latcount

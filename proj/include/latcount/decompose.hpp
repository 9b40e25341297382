#pragma once

#include <vector>

#include "latcount/arith.hpp"
#include "latcount/cone.hpp"
#include "latcount/linalg.hpp"

namespace latcount {

struct DescentError : Error {
    using Error::Error;
};
struct IrrationalityError : Error {
    using Error::Error;
};

// w = B alpha, w integral, primitive, max |alpha_i| < 1.
struct ShortVector {
    IntVec w;
    RatVec alpha;
};

struct DecompStats {
    long long cones_emitted = 0;
    long long nodes_visited = 0;
    int max_depth = 0;
    long long vertices = 0;
    long long triangulation_simplices = 0;
    long long irrational_checks = 0;
    long long minkowski_violations = 0;
    long long depth_bound_violations = 0;
    std::vector<long long> terms_per_vertex;
    long long wall_ms = 0;

    void merge(const DecompStats& o);
};

enum class Mode { DualStopped, PrimalIrrational, AllPrimal, Homogenized };
enum class Substitution { Polynomial, Exponential };
enum class StopMetric { OwnIndex, PolarIndex };

struct EngineOptions {
    Int max_index = 1;  // ell
    Mode mode = Mode::PrimalIrrational;
    Substitution substitution = Substitution::Exponential;
    bool deterministic = true;
    unsigned long rng_seed = 0;
};

// Shortest-found nonzero vector (infinity norm) of the lattice B^{-1} Z^d,
// expressed as w = B alpha. Pre: |det B| >= 2. Throws DescentError when the
// search fails to achieve max |alpha_i| < 1.
ShortVector short_vector(const IntMat& b);
ShortVector short_vector(const IntMat& b, const AdjResult& adj);

// One signed decomposition step: for each alpha_i != 0, the cone with b_i
// replaced by w, carrying sign * sign(alpha_i). alpha_i = 0 children are
// lower-dimensional and omitted.
std::vector<SimplicialCone> decompose_step(const SimplicialCone& k, const ShortVector& sv);

struct DecomposeOptions {
    Int max_index = 1;
    StopMetric metric = StopMetric::OwnIndex;
    bool certify_irrational = false;
};

// Recursive signed decomposition until every leaf's stop metric is at most
// max_index. Signs multiply along root-to-leaf paths.
std::vector<SimplicialCone> decompose_to_index(const SimplicialCone& k,
                                               const DecomposeOptions& opts,
                                               DecompStats& stats);

}  // namespace latcount

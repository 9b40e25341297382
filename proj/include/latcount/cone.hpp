#pragma once

#include <vector>

#include "latcount/arith.hpp"
#include "latcount/polytope.hpp"

namespace latcount {

// v + B R^d_+ with a sign for use in signed decompositions.
struct SimplicialCone {
    RatVec apex;
    IntMat basis;  // d x d, primitive columns, det != 0
    int sign = +1;
};

Int cone_index(const SimplicialCone& k);

// Columns of -(B^{-1})^T, unscaled. The cone is
// {x : <b*_i, x> <= <b*_i, apex>} for these columns b*_i.
RatMat dual_basis(const IntMat& b);

// Polar cone: basis -(B^{-1})^T with columns scaled to primitive integers.
SimplicialCone polarize(const SimplicialCone& k);

// Placing triangulation over the generators in input order. Simplices use
// only input generators; deterministic.
std::vector<SimplicialCone> triangulate(const RayCone& c);

struct ParallelepipedPoints {
    std::vector<IntVec> points;
};

// The integer points of Pi = apex + { sum lambda_i b_i : 0 <= lambda_i < 1 },
// enumerated through the Smith normal form of the basis.
ParallelepipedPoints enumerate_parallelepiped(const SimplicialCone& k);

}  // namespace latcount

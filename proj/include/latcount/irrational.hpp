#pragma once

#include "latcount/arith.hpp"
#include "latcount/cone.hpp"

namespace latcount {

// Open cube of apex positions preserving the cone's integer points, with no
// integer point left on any proper face.
struct StabilityCube {
    RatVec center;
    Rat radius;
};

struct ShiftParams {
    Int index_bound;  // D
    Int entry_bound;  // C
    int depth;        // k
    Int l;
    Int m;
    Int r;
    RatVec s;
    RatVec v_tilde;
};

// Closed-form cube for a simplicial cone v + B R^d_+.
StabilityCube stability_cube_simplicial(const RatVec& v, const IntMat& b);

// LP-based cube for a general pointed full-dimensional cone at v described
// by the facet normal rows (<n_i, x> <= <n_i, v>).
StabilityCube stability_cube_lp(const RatVec& v, const IntMat& facet_normals);

// Uniform irrational shifting vector: v_tilde = center + s with
// s = (1/r) * (1/(2M), ..., 1/(2M)^d).
ShiftParams make_shift(const StabilityCube& cube, const Int& index_bound,
                       const Int& entry_bound, int dim);

// D = (max_i ||b_i||^2)^(n/2), rounded up; bounds the index of every
// simplicial cone in any triangulation using the given generators.
Int index_bound_for_triangulation(const IntMat& generators);

// True iff <det(B) b*_i, apex> is non-integral for every dual basis column;
// then no lattice point lies on any facet of the cone.
bool verify_irrational(const SimplicialCone& k);

// k(D) = floor(1 + log2 log2 D / log2(d/(d-1))) for D >= 2; k(1) = 0.
int depth_bound_k(const Int& index, int dim);

}  // namespace latcount

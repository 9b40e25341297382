#pragma once

#include "latcount/arith.hpp"

namespace latcount {

// Exact determinant by fraction-free (Bareiss) elimination.
Int det(const IntMat& m);

// Exact rational inverse. Throws SingularMatrixError when det = 0.
RatMat inverse(const IntMat& m);

// Integer adjugate with the determinant: m * adj = det * I. All arithmetic
// fraction-free. Throws SingularMatrixError when det = 0.
struct AdjResult {
    IntMat adj;
    Int det;
};
AdjResult adjugate(const IntMat& m);

// U * B * V = S with |det U| = |det V| = 1, S diagonal, s_1 | s_2 | ... | s_d,
// all s_i > 0 for nonsingular B.
struct SnfResult {
    IntMat u;
    IntMat s;
    IntMat v;
};
SnfResult snf(const IntMat& b);

// LLL reduction of the lattice generated by the columns, delta = 3/4.
// Output columns generate the same lattice. Throws DependentColumnsError.
IntMat lll_reduce(const IntMat& basis);

bool is_lll_reduced(const IntMat& basis, const Rat& delta);

// Exact rank over the rationals.
int rank(const RatMat& m);
int rank(const IntMat& m);

}  // namespace latcount

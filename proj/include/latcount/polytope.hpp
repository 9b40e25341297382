#pragma once

#include <optional>
#include <vector>

#include "latcount/arith.hpp"

namespace latcount {

struct UnboundedError : Error {
    using Error::Error;
};
struct EmptyPolytopeError : Error {
    using Error::Error;
};
struct NotFullDimensionalError : Error {
    using Error::Error;
};
struct NonPointedError : Error {
    using Error::Error;
};
struct NotVertexError : Error {
    using Error::Error;
};

// {x : A x <= b}
struct HRep {
    IntMat a;
    IntVec b;

    int dim() const { return a.cols(); }
    int rows() const { return a.rows(); }
};

struct Vertex {
    RatVec point;
    std::vector<int> tight_rows;
};

// Cone given by generators (and, when known, its facet normals as rows).
struct RayCone {
    RatVec apex;
    IntMat generators;  // d x n, primitive columns
    std::optional<IntMat> facet_normals;  // rows: outer normals (<.,x> <= <.,apex>)
};

// Extreme rays of the pointed cone {y : <n_i, y> <= 0}, n_i the rows of
// `normals`. Primitive integer columns. Throws NonPointedError when the
// normal rows do not have full column rank.
IntMat extreme_rays_of_inequalities(const IntMat& normals);

// Outer facet normals (columns, primitive) of the pointed full-dimensional
// cone spanned by the given generator columns, under the <n, x> <= 0
// convention.
IntMat dual_description(const IntMat& rays);

// Throws UnboundedError / EmptyPolytopeError / NotFullDimensionalError.
void check_engine_input(const HRep& p);

// Componentwise integer bounds: smallest box [lo, hi] containing P.
// Throws UnboundedError / EmptyPolytopeError.
struct Box {
    IntVec lo, hi;
};
Box bounding_box(const HRep& p);

std::vector<Vertex> enumerate_vertices(const HRep& p);

RayCone supporting_cone(const HRep& p, const Vertex& v);

}  // namespace latcount

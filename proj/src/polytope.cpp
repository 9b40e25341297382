#include "latcount/polytope.hpp"

#include <algorithm>
#include <cstdint>

#include "latcount/linalg.hpp"
#include "latcount/simplex_lp.hpp"

namespace latcount {

namespace {

struct TightSet {
    std::vector<std::uint64_t> bits;

    explicit TightSet(int nrows) : bits((nrows + 63) / 64, 0) {}
    void set(int i) { bits[i / 64] |= std::uint64_t(1) << (i % 64); }

    static TightSet intersect(const TightSet& a, const TightSet& b) {
        TightSet r = a;
        for (std::size_t w = 0; w < r.bits.size(); ++w) r.bits[w] &= b.bits[w];
        return r;
    }
    bool contains(const TightSet& sub) const {
        for (std::size_t w = 0; w < bits.size(); ++w)
            if ((sub.bits[w] & ~bits[w]) != 0) return false;
        return true;
    }
};

struct DdRay {
    IntVec v;
    TightSet tight;
};

TightSet tight_rows_of(const IntVec& ray, const IntMat& normals,
                       const std::vector<int>& processed) {
    TightSet t(normals.rows());
    for (int i : processed) {
        Int s;
        for (int j = 0; j < normals.cols(); ++j) s += normals(i, j) * ray[j];
        if (s == 0) t.set(i);
    }
    return t;
}

}  // namespace

IntMat extreme_rays_of_inequalities(const IntMat& normals) {
    const int k = normals.cols();
    const int m = normals.rows();

    // Initial simplicial cone from the first k independent rows.
    std::vector<int> init;
    {
        RatMat probe(0, k);
        std::vector<RatVec> rows;
        for (int i = 0; i < m && int(init.size()) < k; ++i) {
            std::vector<int> cand = init;
            cand.push_back(i);
            RatMat sub(int(cand.size()), k);
            for (int r = 0; r < int(cand.size()); ++r)
                for (int j = 0; j < k; ++j) sub(r, j) = Rat(normals(cand[r], j));
            if (rank(sub) == int(cand.size())) init = cand;
        }
    }
    if (int(init.size()) < k)
        throw NonPointedError("cone description has a lineality direction");

    IntMat ninit(k, k);
    for (int r = 0; r < k; ++r)
        for (int j = 0; j < k; ++j) ninit(r, j) = normals(init[r], j);
    RatMat inv = inverse(ninit);

    std::vector<int> processed = init;
    std::vector<DdRay> rays;
    for (int j = 0; j < k; ++j) {
        RatVec col(k);
        for (int i = 0; i < k; ++i) col[i] = -inv(i, j);
        IntVec r = primitive(scale_to_integer(col));
        rays.push_back(DdRay{r, tight_rows_of(r, normals, processed)});
    }

    std::vector<bool> done(m, false);
    for (int i : init) done[i] = true;

    for (int h = 0; h < m; ++h) {
        if (done[h]) continue;
        processed.push_back(h);
        std::vector<Int> val(rays.size());
        for (std::size_t r = 0; r < rays.size(); ++r) {
            Int s;
            for (int j = 0; j < k; ++j) s += normals(h, j) * rays[r].v[j];
            val[r] = s;
        }
        std::vector<DdRay> next;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            if (val[r] > 0) continue;
            DdRay keep = rays[r];
            if (val[r] == 0) keep.tight.set(h);
            next.push_back(std::move(keep));
        }
        for (std::size_t p = 0; p < rays.size(); ++p) {
            if (val[p] <= 0) continue;
            for (std::size_t q = 0; q < rays.size(); ++q) {
                if (val[q] >= 0) continue;
                // Combinatorial adjacency: no third extreme ray is tight on
                // every row where both p and q are tight.
                TightSet common = TightSet::intersect(rays[p].tight, rays[q].tight);
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
                    if (r != p && r != q && rays[r].tight.contains(common))
                        adjacent = false;
                if (!adjacent) continue;
                IntVec nv(k);
                for (int j = 0; j < k; ++j)
                    nv[j] = val[p] * rays[q].v[j] - val[q] * rays[p].v[j];
                nv = primitive(nv);
                next.push_back(DdRay{nv, tight_rows_of(nv, normals, processed)});
            }
        }
        rays = std::move(next);
    }

    IntMat out(k, int(rays.size()));
    for (std::size_t r = 0; r < rays.size(); ++r)
        for (int i = 0; i < k; ++i) out(i, int(r)) = rays[r].v[i];
    return out;
}

IntMat dual_description(const IntMat& rays) {
    const int d = rays.rows();
    if (rank(rays) < d)
        throw NotFullDimensionalError("dual_description: cone not full-dimensional");
    // Pointedness: some y with <r_j, y> < 0 for every generator.
    {
        const int n = rays.cols();
        RatMat g(n + 1, d + 1);
        RatVec h(n + 1), c(d + 1);
        for (int j = 0; j < n; ++j) {
            for (int i = 0; i < d; ++i) g(j, i) = Rat(rays(i, j));
            g(j, d) = 1;
        }
        g(n, d) = 1;
        h[n] = 1;
        c[d] = 1;
        LpResult r = solve_lp(g, h, c);
        if (r.status != LpStatus::Optimal || r.objective <= 0)
            throw NonPointedError("dual_description: cone contains a line");
    }
    return extreme_rays_of_inequalities(transpose(rays));
}

namespace {

// max eps with <a_i, x> + eps <= b_i, eps <= 1: positive iff P has interior.
Rat interior_margin(const HRep& p) {
    const int d = p.dim();
    const int m = p.rows();
    RatMat g(m + 1, d + 1);
    RatVec h(m + 1), c(d + 1);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < d; ++j) g(i, j) = Rat(p.a(i, j));
        g(i, d) = 1;
        h[i] = Rat(p.b[i]);
    }
    g(m, d) = 1;
    h[m] = 1;
    c[d] = 1;
    LpResult r = solve_lp(g, h, c);
    if (r.status != LpStatus::Optimal)
        throw Error("interior_margin: unexpected LP status");
    return r.objective;
}

}  // namespace

Box bounding_box(const HRep& p) {
    const int d = p.dim();
    const int m = p.rows();
    RatMat g = to_rat(p.a);
    RatVec h(m);
    for (int i = 0; i < m; ++i) h[i] = Rat(p.b[i]);

    Box box;
    box.lo.resize(d);
    box.hi.resize(d);
    for (int k = 0; k < d; ++k) {
        for (int dir : {+1, -1}) {
            RatVec c(d);
            c[k] = dir;
            LpResult r = solve_lp(g, h, c);
            if (r.status == LpStatus::Unbounded)
                throw UnboundedError("polytope is unbounded in coordinate " +
                                     std::to_string(k));
            if (r.status == LpStatus::Infeasible)
                throw EmptyPolytopeError("polytope is empty");
            if (dir > 0)
                box.hi[k] = floor_rat(r.objective);
            else
                box.lo[k] = ceil_rat(-r.objective);
        }
    }
    return box;
}

void check_engine_input(const HRep& p) {
    Rat margin = interior_margin(p);
    if (margin < 0) throw EmptyPolytopeError("polytope is empty");
    if (margin == 0)
        throw NotFullDimensionalError("polytope is not full-dimensional");
    bounding_box(p);  // throws when unbounded
}

std::vector<Vertex> enumerate_vertices(const HRep& p) {
    check_engine_input(p);
    const int d = p.dim();
    const int m = p.rows();

    // Homogenize: rays of {(x, t) : A x - b t <= 0, t >= 0} with t > 0 are
    // the vertices of P.
    IntMat normals(m + 1, d + 1);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < d; ++j) normals(i, j) = p.a(i, j);
        normals(i, d) = -p.b[i];
    }
    normals(m, d) = -1;

    IntMat rays = extreme_rays_of_inequalities(normals);
    std::vector<Vertex> verts;
    for (int r = 0; r < rays.cols(); ++r) {
        IntVec ray = rays.col(r);
        if (ray[d] <= 0) throw Error("enumerate_vertices: unexpected recession ray");
        Vertex v;
        v.point.resize(d);
        for (int j = 0; j < d; ++j) v.point[j] = make_rat(ray[j], ray[d]);
        for (int i = 0; i < m; ++i)
            if (dot(p.a.row(i), v.point) == Rat(p.b[i])) v.tight_rows.push_back(i);
        RatMat tight(int(v.tight_rows.size()), d);
        for (std::size_t t = 0; t < v.tight_rows.size(); ++t)
            for (int j = 0; j < d; ++j) tight(int(t), j) = Rat(p.a(v.tight_rows[t], j));
        if (rank(tight) != d) throw Error("enumerate_vertices: tight rows rank deficient");
        verts.push_back(std::move(v));
    }
    return verts;
}

RayCone supporting_cone(const HRep& p, const Vertex& v) {
    const int d = p.dim();
    if (int(v.point.size()) != d) throw DimensionError("supporting_cone: bad vertex");
    std::vector<int> tight;
    for (int i = 0; i < p.rows(); ++i) {
        Rat s = dot(p.a.row(i), v.point);
        if (s > Rat(p.b[i])) throw NotVertexError("supporting_cone: point outside polytope");
        if (s == Rat(p.b[i])) tight.push_back(i);
    }
    IntMat n(int(tight.size()), d);
    for (std::size_t t = 0; t < tight.size(); ++t)
        for (int j = 0; j < d; ++j) n(int(t), j) = p.a(tight[t], j);
    if (rank(n) != d) throw NotVertexError("supporting_cone: point is not a vertex");

    RayCone cone;
    cone.apex = v.point;
    cone.generators = extreme_rays_of_inequalities(n);
    cone.facet_normals = n;
    return cone;
}

}  // namespace latcount

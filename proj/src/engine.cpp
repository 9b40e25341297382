#include "latcount/engine.hpp"

#include <chrono>
#include <future>

#include "latcount/irrational.hpp"
#include "latcount/linalg.hpp"

namespace latcount {

namespace {

Int max_abs_entry(const IntMat& m) {
    Int c(1);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            Int a = abs_int(m(i, j));
            if (a > c) c = a;
        }
    return c;
}

IntMat columns_from_rows(const IntMat& rows) {
    IntMat m(rows.cols(), rows.rows());
    for (int i = 0; i < rows.rows(); ++i) m.set_col(i, primitive(rows.row(i)));
    return m;
}

struct VertexWork {
    std::vector<GenFunTerm> terms;
    DecompStats stats;
    bool build_terms = true;

    void emit(const std::vector<SimplicialCone>& leaves) {
        if (!build_terms) return;
        for (const auto& leaf : leaves)
            terms.push_back(term_from_cone(leaf, enumerate_parallelepiped(leaf)));
    }
};

VertexWork process_vertex(const HRep& p, const Vertex& v, const EngineOptions& opts,
                          bool build_terms) {
    const int d = p.dim();
    VertexWork work;
    work.build_terms = build_terms;
    RayCone cone = supporting_cone(p, v);
    const IntMat& facet_rows = *cone.facet_normals;

    switch (opts.mode) {
        case Mode::DualStopped: {
            // Triangulate and decompose the polar; stop on the index of the
            // polarized-back cone.
            RayCone dual{v.point, columns_from_rows(facet_rows), std::nullopt};
            auto dual_simplices = triangulate(dual);
            work.stats.triangulation_simplices += long(dual_simplices.size());
            DecomposeOptions dopts{opts.max_index, StopMetric::PolarIndex, false};
            for (const auto& ds : dual_simplices) {
                auto leaves = decompose_to_index(ds, dopts, work.stats);
                if (!build_terms) continue;
                std::vector<SimplicialCone> primal;
                primal.reserve(leaves.size());
                for (const auto& leaf : leaves) primal.push_back(polarize(leaf));
                work.emit(primal);
            }
            break;
        }
        case Mode::PrimalIrrational: {
            std::vector<SimplicialCone> primal;
            if (cone.generators.cols() == d) {
                primal.push_back(SimplicialCone{v.point, cone.generators, +1});
            } else {
                RayCone dual{v.point, columns_from_rows(facet_rows), std::nullopt};
                for (const auto& ds : triangulate(dual)) primal.push_back(polarize(ds));
            }
            work.stats.triangulation_simplices += long(primal.size());
            DecomposeOptions dopts{opts.max_index, StopMetric::OwnIndex, true};
            for (auto& k : primal) {
                StabilityCube cube = stability_cube_simplicial(v.point, k.basis);
                ShiftParams shift = make_shift(cube, cone_index(k),
                                               max_abs_entry(k.basis), d);
                k.apex = shift.v_tilde;
                work.emit(decompose_to_index(k, dopts, work.stats));
            }
            break;
        }
        case Mode::AllPrimal: {
            StabilityCube cube = stability_cube_lp(v.point, facet_rows);
            ShiftParams shift = make_shift(cube,
                                           index_bound_for_triangulation(cone.generators),
                                           max_abs_entry(cone.generators), d);
            cone.apex = shift.v_tilde;
            auto simplices = triangulate(cone);
            work.stats.triangulation_simplices += long(simplices.size());
            DecomposeOptions dopts{opts.max_index, StopMetric::OwnIndex, true};
            for (const auto& k : simplices)
                work.emit(decompose_to_index(k, dopts, work.stats));
            break;
        }
        case Mode::Homogenized:
            throw Error("homogenized mode has no per-vertex pipeline");
    }
    work.stats.vertices = 1;
    work.stats.terms_per_vertex.push_back(long(work.terms.size()));
    return work;
}

}  // namespace

namespace {

EngineResult run_pipeline(const HRep& p, const EngineOptions& opts, bool build_terms) {
    if (opts.max_index < 1) throw Error("genfun_polytope: max_index must be >= 1");
    if (opts.mode == Mode::Homogenized)
        throw Error(
            "homogenized mode emits the generating function of the homogenization "
            "cone; use genfun_homogenization");
    auto t0 = std::chrono::steady_clock::now();

    auto vertices = enumerate_vertices(p);
    EngineResult res;
    res.genfun.dim = p.dim();

    std::vector<VertexWork> work(vertices.size());
    if (opts.deterministic || vertices.size() <= 1) {
        for (std::size_t i = 0; i < vertices.size(); ++i)
            work[i] = process_vertex(p, vertices[i], opts, build_terms);
    } else {
        std::vector<std::future<VertexWork>> futs;
        futs.reserve(vertices.size());
        for (std::size_t i = 0; i < vertices.size(); ++i)
            futs.push_back(std::async(std::launch::async, process_vertex, std::cref(p),
                                      std::cref(vertices[i]), std::cref(opts),
                                      build_terms));
        for (std::size_t i = 0; i < vertices.size(); ++i) work[i] = futs[i].get();
    }
    for (auto& w : work) {
        res.stats.merge(w.stats);
        for (auto& t : w.terms) res.genfun.terms.push_back(std::move(t));
    }
    res.stats.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    return res;
}

}  // namespace

EngineResult genfun_polytope(const HRep& p, const EngineOptions& opts) {
    return run_pipeline(p, opts, true);
}

DecompStats survey_polytope(const HRep& p, const EngineOptions& opts) {
    return run_pipeline(p, opts, false).stats;
}

Int count_polytope(const HRep& p, const EngineOptions& opts) {
    EngineResult res = genfun_polytope(p, opts);
    SubstitutionContext ctx = pick_lambda(res.genfun, opts.rng_seed);
    return opts.substitution == Substitution::Exponential
               ? count_exponential(res.genfun, ctx)
               : count_polynomial(res.genfun, ctx);
}

EngineResult genfun_homogenization(const HRep& p, const Int& max_index) {
    if (max_index < 1) throw Error("genfun_homogenization: max_index must be >= 1");
    check_engine_input(p);
    auto t0 = std::chrono::steady_clock::now();
    const int d = p.dim();
    const int hd = d + 1;

    // Polar of C = {(xi x, xi)} has the rays (A_i, -b_i).
    IntMat polar_rays(hd, p.rows());
    for (int i = 0; i < p.rows(); ++i) {
        IntVec r(hd);
        for (int j = 0; j < d; ++j) r[j] = p.a(i, j);
        r[d] = -p.b[i];
        polar_rays.set_col(i, primitive(r));
    }

    EngineResult res;
    res.genfun.dim = hd;
    RatVec origin(hd);
    RayCone polar{origin, polar_rays, std::nullopt};
    auto dual_simplices = triangulate(polar);
    res.stats.vertices = 1;
    res.stats.triangulation_simplices = long(dual_simplices.size());

    DecomposeOptions dopts{max_index, StopMetric::OwnIndex, true};
    for (const auto& ds : dual_simplices) {
        SimplicialCone k = polarize(ds);
        StabilityCube cube = stability_cube_simplicial(origin, k.basis);
        ShiftParams shift =
            make_shift(cube, cone_index(k), max_abs_entry(k.basis), hd);
        k.apex = shift.v_tilde;
        for (const auto& leaf : decompose_to_index(k, dopts, res.stats))
            res.genfun.terms.push_back(
                term_from_cone(leaf, enumerate_parallelepiped(leaf)));
    }
    res.stats.terms_per_vertex.push_back(long(res.genfun.terms.size()));
    res.stats.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    return res;
}

namespace {

inline Int as_int(const Int& x) { return x; }
inline Int as_int(long long x) { return Int(static_cast<long>(x)); }

// Pruned box scan. Works in int64 when every partial product fits safely,
// falling back to exact integers otherwise.
template <typename T>
Int scan_box(const std::vector<std::vector<T>>& a, const std::vector<T>& b,
             const std::vector<T>& lo, const std::vector<T>& hi) {
    const int m = int(a.size());
    const int d = int(lo.size());
    // suffix[i][k]: minimal achievable contribution of coordinates k.. to row i.
    std::vector<std::vector<T>> suffix(m, std::vector<T>(d + 1));
    for (int i = 0; i < m; ++i)
        for (int k = d - 1; k >= 0; --k)
            suffix[i][k] =
                suffix[i][k + 1] + (a[i][k] >= 0 ? a[i][k] * lo[k] : a[i][k] * hi[k]);

    Int count(0);
    std::vector<T> partial(m);
    std::vector<T> x(d);

    auto rec = [&](auto&& self, int k) -> void {
        if (k == d) {
            count += 1;
            return;
        }
        T xlo = lo[k], xhi = hi[k];
        for (int i = 0; i < m; ++i) {
            T rest = b[i] - partial[i] - suffix[i][k + 1];
            T c = a[i][k];
            if (c == 0) {
                if (rest < 0) return;
            } else if (c > 0) {
                // c * x <= rest
                T q;
                if (rest >= 0)
                    q = rest / c;
                else
                    q = -((c - 1 - rest) / c);
                if (q < xhi) xhi = q;
            } else {
                T nc = -c;
                T q;
                if (rest >= 0)
                    q = -(rest / nc);
                else
                    q = (nc - 1 - rest) / nc;
                if (q > xlo) xlo = q;
            }
            if (xlo > xhi) return;
        }
        if (k == d - 1) {
            // Remaining rows were all accounted for above.
            T width = xhi - xlo + 1;
            count += as_int(width);
            return;
        }
        for (T v = xlo; v <= xhi; ++v) {
            x[k] = v;
            for (int i = 0; i < m; ++i) partial[i] += a[i][k] * v;
            self(self, k + 1);
            for (int i = 0; i < m; ++i) partial[i] -= a[i][k] * v;
        }
    };
    rec(rec, 0);
    return count;
}

}  // namespace

Int brute_force_count(const HRep& p) {
    Box box;
    try {
        box = bounding_box(p);
    } catch (const EmptyPolytopeError&) {
        return Int(0);
    }
    const int d = p.dim();
    const int m = p.rows();
    Int volume(1);
    for (int k = 0; k < d; ++k) {
        if (box.lo[k] > box.hi[k]) return Int(0);
        volume *= box.hi[k] - box.lo[k] + 1;
        if (volume > 100000000) throw Error("brute_force_count: box volume cap exceeded");
    }

    // int64 fast path when all intermediate values stay far from overflow.
    Int word_bound(0);
    for (int k = 0; k < d; ++k) {
        Int mag = std::max(abs_int(box.lo[k]), abs_int(box.hi[k]));
        Int row_max(0);
        for (int i = 0; i < m; ++i)
            if (abs_int(p.a(i, k)) > row_max) row_max = abs_int(p.a(i, k));
        word_bound += row_max * mag;
    }
    for (int i = 0; i < m; ++i) word_bound += abs_int(p.b[i]);

    if (word_bound < Int(1) << 60) {
        std::vector<std::vector<long long>> a(m, std::vector<long long>(d));
        std::vector<long long> b(m), lo(d), hi(d);
        for (int i = 0; i < m; ++i) {
            b[i] = p.b[i].get_si();
            for (int j = 0; j < d; ++j) a[i][j] = p.a(i, j).get_si();
        }
        for (int k = 0; k < d; ++k) {
            lo[k] = box.lo[k].get_si();
            hi[k] = box.hi[k].get_si();
        }
        return scan_box<long long>(a, b, lo, hi);
    }
    std::vector<std::vector<Int>> a(m, std::vector<Int>(d));
    std::vector<Int> b(m);
    for (int i = 0; i < m; ++i) {
        b[i] = p.b[i];
        for (int j = 0; j < d; ++j) a[i][j] = p.a(i, j);
    }
    return scan_box<Int>(a, b, box.lo, box.hi);
}

}  // namespace latcount

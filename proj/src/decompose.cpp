#include "latcount/decompose.hpp"

#include <algorithm>

#include "latcount/irrational.hpp"
#include "latcount/linalg.hpp"

namespace latcount {

void DecompStats::merge(const DecompStats& o) {
    cones_emitted += o.cones_emitted;
    nodes_visited += o.nodes_visited;
    max_depth = std::max(max_depth, o.max_depth);
    vertices += o.vertices;
    triangulation_simplices += o.triangulation_simplices;
    irrational_checks += o.irrational_checks;
    minkowski_violations += o.minkowski_violations;
    depth_bound_violations += o.depth_bound_violations;
    terms_per_vertex.insert(terms_per_vertex.end(), o.terms_per_vertex.begin(),
                            o.terms_per_vertex.end());
}

namespace {

bool lex_less(const IntVec& a, const IntVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

bool first_nonzero_positive(const IntVec& v) {
    for (const auto& x : v) {
        if (x != 0) return x > 0;
    }
    return false;
}

}  // namespace

ShortVector short_vector(const IntMat& b) { return short_vector(b, adjugate(b)); }

ShortVector short_vector(const IntMat& b, const AdjResult& ar) {
    const int d = b.rows();
    if (abs_int(ar.det) < 2) throw Error("short_vector: index below 2");

    // Smallest positive multiple of B^{-1} = adj/det that is integral.
    Int g = abs_int(ar.det);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) g = gcd(g, ar.adj(i, j));
    Int scale = abs_int(ar.det) / g;
    const int flip = ar.det > 0 ? +1 : -1;
    IntMat w(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) w(i, j) = flip * ar.adj(i, j) / g;
    IntMat reduced = lll_reduce(w);

    // Search the coefficient box {-1,0,1}^d over the reduced basis. The
    // counter changes few digits per step, so u is updated incrementally;
    // norms compare as integers against the common scale. Entries fit in
    // int64 except for extreme inputs, which take the exact path.
    bool have = false;
    Int best_norm;
    std::vector<IntVec> tied;  // u vectors achieving the minimum

    Int entry_cap(0);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) entry_cap = std::max(entry_cap, abs_int(reduced(i, j)));
    bool fits = Int(d) * entry_cap < (Int(1) << 60) && scale < (Int(1) << 60);

    if (fits) {
        std::vector<long long> r(std::size_t(d) * d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) r[std::size_t(i) * d + j] = reduced(i, j).get_si();
        const long long iscale = scale.get_si();
        std::vector<int> coef(d, -1);
        std::vector<long long> u(d, 0);
        for (int j = 0; j < d; ++j)
            for (int i = 0; i < d; ++i) u[i] -= r[std::size_t(i) * d + j];
        long long best = -1;
        std::vector<std::vector<long long>> ties64;
        for (;;) {
            bool all_zero = true;
            for (int j = 0; j < d; ++j)
                if (coef[j] != 0) {
                    all_zero = false;
                    break;
                }
            if (!all_zero) {
                long long norm = 0;
                for (int i = 0; i < d; ++i) {
                    long long a = u[i] < 0 ? -u[i] : u[i];
                    if (a > norm) norm = a;
                }
                if (norm < iscale) {
                    if (best < 0 || norm < best) {
                        best = norm;
                        ties64.clear();
                        ties64.push_back(u);
                    } else if (norm == best) {
                        ties64.push_back(u);
                    }
                }
            }
            int c = d - 1;
            while (c >= 0) {
                if (coef[c] < 1) {
                    coef[c]++;
                    for (int i = 0; i < d; ++i) u[i] += r[std::size_t(i) * d + c];
                    break;
                }
                coef[c] = -1;
                for (int i = 0; i < d; ++i) u[i] -= 2 * r[std::size_t(i) * d + c];
                --c;
            }
            if (c < 0) break;
        }
        have = best >= 0;
        if (have) {
            best_norm = Int(static_cast<long>(best));
            for (const auto& t : ties64) {
                IntVec v(d);
                for (int i = 0; i < d; ++i) v[i] = Int(static_cast<long>(t[i]));
                tied.push_back(std::move(v));
            }
        }
    } else {
        std::vector<int> coef(d, -1);
        IntVec u(d);
        for (int j = 0; j < d; ++j)
            for (int i = 0; i < d; ++i) u[i] -= reduced(i, j);
        Int tmp;
        for (;;) {
            bool all_zero = true;
            for (int j = 0; j < d; ++j)
                if (coef[j] != 0) {
                    all_zero = false;
                    break;
                }
            if (!all_zero) {
                Int norm(0);
                for (int i = 0; i < d; ++i) {
                    tmp = abs_int(u[i]);
                    if (tmp > norm) norm = tmp;
                }
                if (norm < scale) {
                    if (!have || norm < best_norm) {
                        best_norm = norm;
                        tied.clear();
                        tied.push_back(u);
                        have = true;
                    } else if (norm == best_norm) {
                        tied.push_back(u);
                    }
                }
            }
            int c = d - 1;
            while (c >= 0) {
                if (coef[c] < 1) {
                    coef[c]++;
                    for (int i = 0; i < d; ++i) u[i] += reduced(i, c);
                    break;
                }
                coef[c] = -1;
                for (int i = 0; i < d; ++i) u[i] -= 2 * reduced(i, c);
                --c;
            }
            if (c < 0) break;
        }
    }
    if (!have) throw DescentError("short_vector: no descent vector found");

    // Tie break: prefer w inside the cone (all alpha_i >= 0), then a positive
    // leading entry, then lexicographically smallest w.
    bool chosen = false;
    IntVec best_u, best_w;
    bool best_in_cone = false, best_sign_pos = false;
    for (const auto& cand : tied) {
        IntVec wv(d);
        for (int i = 0; i < d; ++i) {
            Int s;
            for (int j = 0; j < d; ++j) s += b(i, j) * cand[j];
            if (s % scale != 0) throw Error("short_vector: non-integral w");
            wv[i] = s / scale;
        }
        bool in_cone = true;
        for (int j = 0; j < d; ++j)
            if (cand[j] < 0) {
                in_cone = false;
                break;
            }
        bool sign_pos = first_nonzero_positive(wv);
        bool better;
        if (!chosen) {
            better = true;
        } else if (in_cone != best_in_cone) {
            better = in_cone;
        } else if (sign_pos != best_sign_pos) {
            better = sign_pos;
        } else {
            better = lex_less(wv, best_w);
        }
        if (better) {
            best_u = cand;
            best_w = std::move(wv);
            best_in_cone = in_cone;
            best_sign_pos = sign_pos;
            chosen = true;
        }
    }

    Int wg;
    for (const auto& x : best_w) wg = gcd(wg, x);
    if (wg > 1)
        for (auto& x : best_w) x /= wg;
    ShortVector out;
    out.w = std::move(best_w);
    out.alpha.resize(d);
    Int denom = scale * wg;
    for (int j = 0; j < d; ++j) out.alpha[j] = make_rat(best_u[j], denom);
    return out;
}

std::vector<SimplicialCone> decompose_step(const SimplicialCone& k, const ShortVector& sv) {
    const int d = k.basis.rows();
    std::vector<SimplicialCone> children;
    for (int i = 0; i < d; ++i) {
        if (sv.alpha[i] == 0) continue;
        SimplicialCone child = k;
        child.basis.set_col(i, sv.w);
        child.sign = k.sign * (sv.alpha[i] > 0 ? +1 : -1);
        children.push_back(std::move(child));
    }
    return children;
}

namespace {

// |det| of the primitive-scaled polar, straight from the adjugate:
// |det B|^{d-1} / prod_i gcd(adj row i).
Int polar_index_from_adj(const AdjResult& ar) {
    const int d = ar.adj.rows();
    Int p(1);
    for (int i = 0; i + 1 < d; ++i) p *= abs_int(ar.det);
    Int gp(1);
    for (int i = 0; i < d; ++i) {
        Int g;
        for (int j = 0; j < d; ++j) g = gcd(g, ar.adj(i, j));
        gp *= g;
    }
    return p / gp;
}

}  // namespace

std::vector<SimplicialCone> decompose_to_index(const SimplicialCone& k,
                                               const DecomposeOptions& opts,
                                               DecompStats& stats) {
    if (opts.max_index < 1) throw Error("decompose_to_index: max_index must be >= 1");
    const int d = k.basis.rows();

    struct Node {
        SimplicialCone cone;
        int depth;
        Int parent_index;  // 0 at the root
    };
    std::vector<Node> stack{{k, 0, Int(0)}};
    std::vector<SimplicialCone> leaves;

    const Int root_index = cone_index(k);
    const int kbound = depth_bound_k(root_index, d);
    bool minkowski_held = true;
    int run_max_depth = 0;

    while (!stack.empty()) {
        Node node = std::move(stack.back());
        stack.pop_back();
        stats.nodes_visited++;
        run_max_depth = std::max(run_max_depth, node.depth);

        if (opts.certify_irrational) {
            stats.irrational_checks++;
            if (!verify_irrational(node.cone))
                throw IrrationalityError("cone with a lattice point on a proper face");
        }

        AdjResult ar = adjugate(node.cone.basis);
        const Int own = abs_int(ar.det);
        if (node.parent_index != 0 && own >= node.parent_index)
            throw DescentError("decompose_to_index: child index did not decrease");

        Int metric = own;
        if (opts.metric == StopMetric::PolarIndex) metric = polar_index_from_adj(ar);
        if (metric <= opts.max_index) {
            stats.cones_emitted++;
            leaves.push_back(std::move(node.cone));
            continue;
        }

        ShortVector sv = short_vector(node.cone.basis, ar);
        // Minkowski bound |alpha_i| <= D^{-1/d}: check max|alpha|^d * D <= 1.
        Rat norm = linf_norm(sv.alpha);
        Rat pow(1);
        for (int i = 0; i < d; ++i) pow *= norm;
        if (pow * Rat(own) > 1) {
            stats.minkowski_violations++;
            minkowski_held = false;
        }

        auto children = decompose_step(node.cone, sv);
        for (auto& child : children)
            stack.push_back({std::move(child), node.depth + 1, own});
    }

    stats.max_depth = std::max(stats.max_depth, run_max_depth);
    if (minkowski_held && run_max_depth > kbound) stats.depth_bound_violations++;
    return leaves;
}

}  // namespace latcount

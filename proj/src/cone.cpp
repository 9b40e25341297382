#include "latcount/cone.hpp"

#include <algorithm>
#include <map>

#include "latcount/linalg.hpp"

namespace latcount {

Int cone_index(const SimplicialCone& k) { return abs_int(det(k.basis)); }

RatMat dual_basis(const IntMat& b) {
    RatMat inv = inverse(b);
    RatMat d(b.rows(), b.cols());
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) d(i, j) = -inv(j, i);
    return d;
}

SimplicialCone polarize(const SimplicialCone& k) {
    // Column i of -(B^{-1})^T is -(adj B)_{i,.} / det B; primitive scaling
    // keeps the direction -sign(det) (adj B)_{i,.}.
    AdjResult a = adjugate(k.basis);
    const int d = k.basis.rows();
    const int flip = a.det > 0 ? -1 : +1;
    IntMat p(d, d);
    for (int j = 0; j < d; ++j) {
        IntVec row(d);
        for (int i = 0; i < d; ++i) row[i] = flip * a.adj(j, i);
        p.set_col(j, primitive(row));
    }
    return SimplicialCone{k.apex, p, k.sign};
}

namespace {

// Primitive integer normal of the hyperplane through the origin spanned by
// the given rays (one-dimensional kernel expected).
IntVec hyperplane_normal(const IntMat& gens, const std::vector<int>& rays) {
    const int d = gens.rows();
    RatMat m(int(rays.size()), d);
    for (std::size_t r = 0; r < rays.size(); ++r)
        for (int j = 0; j < d; ++j) m(int(r), j) = Rat(gens(j, rays[r]));

    // Row echelon; then back-substitute for the single free column.
    std::vector<int> pivot_col(m.rows(), -1);
    int row = 0;
    std::vector<bool> is_pivot(d, false);
    for (int c = 0; c < d && row < m.rows(); ++c) {
        int p = -1;
        for (int i = row; i < m.rows(); ++i)
            if (m(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        for (int j = 0; j < d; ++j) std::swap(m(row, j), m(p, j));
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, c) == 0) continue;
            Rat f = m(i, c) / m(row, c);
            for (int j = 0; j < d; ++j) m(i, j) -= f * m(row, j);
        }
        pivot_col[row] = c;
        is_pivot[c] = true;
        ++row;
    }
    int free_col = -1;
    for (int c = 0; c < d; ++c)
        if (!is_pivot[c]) {
            free_col = c;
            break;
        }
    if (row != d - 1 || free_col < 0)
        throw Error("triangulate: facet rays are rank deficient");

    RatVec n(d);
    n[free_col] = 1;
    for (int i = 0; i < row; ++i)
        n[pivot_col[i]] = -m(i, free_col) / m(i, pivot_col[i]);
    return primitive(scale_to_integer(n));
}

Int dot_col(const IntVec& n, const IntMat& gens, int col) {
    Int s;
    for (int i = 0; i < gens.rows(); ++i) s += n[i] * gens(i, col);
    return s;
}

struct Facet {
    IntVec normal;  // outward w.r.t. the current union
    int owners = 0;
};

}  // namespace

std::vector<SimplicialCone> triangulate(const RayCone& c) {
    const IntMat& gens = c.generators;
    const int d = gens.rows();
    const int n = gens.cols();
    if (rank(gens) != d)
        throw NotFullDimensionalError("triangulate: cone not full-dimensional");

    auto make_cone = [&](const std::vector<int>& idx) {
        IntMat b(d, d);
        for (int j = 0; j < d; ++j) b.set_col(j, gens.col(idx[j]));
        return SimplicialCone{c.apex, b, +1};
    };

    if (n == d) return {make_cone([&] {
        std::vector<int> all(n);
        for (int i = 0; i < n; ++i) all[i] = i;
        return all;
    }())};

    // First d independent generators in input order form the seed simplex.
    std::vector<int> seed;
    for (int i = 0; i < n && int(seed.size()) < d; ++i) {
        std::vector<int> cand = seed;
        cand.push_back(i);
        IntMat sub(d, int(cand.size()));
        for (std::size_t j = 0; j < cand.size(); ++j) sub.set_col(int(j), gens.col(cand[j]));
        if (rank(sub) == int(cand.size())) seed = cand;
    }
    if (int(seed.size()) < d)
        throw NotFullDimensionalError("triangulate: generators rank deficient");

    std::vector<std::vector<int>> simplices{seed};
    std::map<std::vector<int>, Facet> facets;

    auto add_simplex_facets = [&](const std::vector<int>& simplex) {
        for (int omit = 0; omit < d; ++omit) {
            std::vector<int> f;
            for (int j = 0; j < d; ++j)
                if (j != omit) f.push_back(simplex[j]);
            auto it = facets.find(f);
            if (it != facets.end()) {
                it->second.owners++;
                continue;
            }
            IntVec normal = hyperplane_normal(gens, f);
            if (dot_col(normal, gens, simplex[omit]) > 0)
                for (auto& x : normal) x = -x;
            facets.emplace(f, Facet{std::move(normal), 1});
        }
    };
    add_simplex_facets(seed);

    for (int r = 0; r < n; ++r) {
        if (std::find(seed.begin(), seed.end(), r) != seed.end()) continue;
        std::vector<std::vector<int>> visible;
        for (const auto& [key, facet] : facets) {
            if (facet.owners != 1) continue;
            if (dot_col(facet.normal, gens, r) > 0) visible.push_back(key);
        }
        for (const auto& f : visible) {
            std::vector<int> simplex = f;
            simplex.push_back(r);
            std::sort(simplex.begin(), simplex.end());
            simplices.push_back(simplex);
            add_simplex_facets(simplex);
        }
    }

    std::vector<SimplicialCone> out;
    out.reserve(simplices.size());
    for (const auto& s : simplices) out.push_back(make_cone(s));
    return out;
}

ParallelepipedPoints enumerate_parallelepiped(const SimplicialCone& k) {
    const int d = k.basis.rows();
    // Everything over integers: lambda_j = (<adj_j, x> den - n_j) / (det den)
    // where adj = det B^{-1}, n_j = <adj_j, apex_num>.
    AdjResult ar = adjugate(k.basis);
    const Int& dt = ar.det;
    const IntMat& adj = ar.adj;
    Int apex_den(1);
    for (const auto& x : k.apex) apex_den = lcm(apex_den, x.get_den());
    IntVec apex_num(d);
    for (int i = 0; i < d; ++i)
        apex_num[i] = k.apex[i].get_num() * (apex_den / k.apex[i].get_den());
    IntVec napex = adj * apex_num;
    Int denom = dt * apex_den;  // sign matters: floor division below

    ParallelepipedPoints out;
    auto reduce_into = [&](const IntVec& x) {
        IntVec ax = adj * x;
        IntVec pt = x;
        for (int j = 0; j < d; ++j) {
            Int num = ax[j] * apex_den - napex[j];
            Int f;
            mpz_fdiv_q(f.get_mpz_t(), num.get_mpz_t(), denom.get_mpz_t());
            if (f == 0) continue;
            for (int i = 0; i < d; ++i) pt[i] -= f * k.basis(i, j);
        }
        out.points.push_back(std::move(pt));
    };

    if (abs_int(dt) == 1) {
        reduce_into(IntVec(d));
        return out;
    }

    SnfResult s = snf(k.basis);
    RatMat uinv_rat = inverse(s.u);
    IntMat uinv(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            if (!is_integer(uinv_rat(i, j)))
                throw Error("enumerate_parallelepiped: U not unimodular");
            uinv(i, j) = uinv_rat(i, j).get_num();
        }

    IntVec g(d);
    // Row-major over the diagonal ranges: last coordinate varies fastest.
    for (;;) {
        reduce_into(uinv * g);
        int c = d - 1;
        while (c >= 0) {
            g[c] += 1;
            if (g[c] < s.s(c, c)) break;
            g[c] = 0;
            --c;
        }
        if (c < 0) break;
    }
    return out;
}

}  // namespace latcount

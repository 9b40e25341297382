#include "latcount/simplex_lp.hpp"

namespace latcount {

namespace {

// Dense tableau over exact rationals. Columns: free vars split as u - w,
// then slacks, then phase-1 artificials; last column is the rhs.
struct Tableau {
    int m, nvars;
    std::vector<RatVec> t;  // m rows, nvars+1 cols
    std::vector<int> basis;

    void pivot(int row, int col) {
        Rat p = t[row][col];
        for (auto& x : t[row]) x /= p;
        for (int i = 0; i < m; ++i) {
            if (i == row || t[i][col] == 0) continue;
            Rat f = t[i][col];
            for (int j = 0; j <= nvars; ++j) t[i][j] -= f * t[row][j];
        }
        basis[row] = col;
    }

    Rat objective(const RatVec& cost) const {
        Rat z;
        for (int i = 0; i < m; ++i) z += cost[basis[i]] * t[i][nvars];
        return z;
    }

    // Bland's rule. Returns false when optimal; throws on unbounded.
    bool step(const RatVec& cost, int eligible_cols) {
        for (int j = 0; j < eligible_cols; ++j) {
            // reduced cost z_j = c_j - c_B^T (B^-1 A_j)
            Rat zj = cost[j];
            for (int i = 0; i < m; ++i)
                if (t[i][j] != 0) zj -= cost[basis[i]] * t[i][j];
            if (zj <= 0) continue;
            int leave = -1;
            Rat best;
            for (int i = 0; i < m; ++i) {
                if (t[i][j] <= 0) continue;
                Rat ratio = t[i][nvars] / t[i][j];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    best = ratio;
                    leave = i;
                }
            }
            if (leave < 0) throw LpStatus::Unbounded;
            pivot(leave, j);
            return true;
        }
        return false;
    }
};

}  // namespace

LpResult solve_lp(const RatMat& g, const RatVec& h, const RatVec& c) {
    const int m = g.rows();
    const int n = g.cols();
    if (int(h.size()) != m || int(c.size()) != n)
        throw DimensionError("solve_lp: shape mismatch");

    const int nsplit = 2 * n;
    const int nslack = m;
    // Artificials only for rows whose rhs is negative after normalization.
    std::vector<int> art_of_row(m, -1);
    int nart = 0;
    for (int i = 0; i < m; ++i)
        if (h[i] < 0) art_of_row[i] = nart++;

    Tableau tab;
    tab.m = m;
    tab.nvars = nsplit + nslack + nart;
    tab.t.assign(m, RatVec(tab.nvars + 1));
    tab.basis.assign(m, 0);

    for (int i = 0; i < m; ++i) {
        const bool flip = h[i] < 0;
        for (int j = 0; j < n; ++j) {
            Rat v = flip ? -g(i, j) : g(i, j);
            tab.t[i][j] = v;
            tab.t[i][n + j] = -v;
        }
        tab.t[i][nsplit + i] = flip ? Rat(-1) : Rat(1);
        tab.t[i][tab.nvars] = flip ? -h[i] : h[i];
        if (flip) {
            tab.t[i][nsplit + nslack + art_of_row[i]] = 1;
            tab.basis[i] = nsplit + nslack + art_of_row[i];
        } else {
            tab.basis[i] = nsplit + i;
        }
    }

    LpResult res;
    try {
        if (nart > 0) {
            RatVec cost1(tab.nvars + 1);
            for (int k = 0; k < nart; ++k) cost1[nsplit + nslack + k] = Rat(-1);
            while (tab.step(cost1, tab.nvars)) {
            }
            if (tab.objective(cost1) != 0) {
                res.status = LpStatus::Infeasible;
                return res;
            }
            // Drive leftover artificials out of the basis where possible.
            for (int i = 0; i < m; ++i) {
                if (tab.basis[i] < nsplit + nslack) continue;
                for (int j = 0; j < nsplit + nslack; ++j) {
                    if (tab.t[i][j] != 0) {
                        tab.pivot(i, j);
                        break;
                    }
                }
            }
        }
        RatVec cost2(tab.nvars + 1);
        for (int j = 0; j < n; ++j) {
            cost2[j] = c[j];
            cost2[n + j] = -c[j];
        }
        while (tab.step(cost2, nsplit + nslack)) {
        }
        res.status = LpStatus::Optimal;
        res.objective = tab.objective(cost2);
        res.x.assign(n, Rat());
        for (int i = 0; i < m; ++i) {
            int b = tab.basis[i];
            if (b < n)
                res.x[b] += tab.t[i][tab.nvars];
            else if (b < nsplit)
                res.x[b - n] -= tab.t[i][tab.nvars];
        }
    } catch (LpStatus s) {
        res.status = s;
    }
    return res;
}

}  // namespace latcount

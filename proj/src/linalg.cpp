#include "latcount/linalg.hpp"

#include <algorithm>
#include <utility>

namespace latcount {

Int det(const IntMat& m) {
    if (!m.square()) throw DimensionError("det: matrix not square");
    const int n = m.rows();
    if (n == 0) return Int(1);
    IntMat a = m;
    Int prev(1);
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return Int(0);
            for (int j = k; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                a(i, j) = t / prev;  // exact by Bareiss
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

AdjResult adjugate(const IntMat& m) {
    if (!m.square()) throw DimensionError("adjugate: matrix not square");
    const int n = m.rows();
    if (n == 0) return {IntMat(0, 0), Int(1)};
    // Fraction-free forward elimination on [M | I], then integer
    // back-substitution for M x = det e_j (all entries of adj are integral,
    // so every division is exact).
    IntMat a(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a(i, j) = m(i, j);
        a(i, n + i) = 1;
    }
    int sign = 1;
    Int prev(1);
    for (int k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) throw SingularMatrixError("adjugate: singular matrix");
            for (int j = 0; j < 2 * n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < 2 * n; ++j) {
                Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                a(i, j) = t / prev;
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    if (a(n - 1, n - 1) == 0) throw SingularMatrixError("adjugate: singular matrix");
    Int dt = sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));

    AdjResult r{IntMat(n, n), dt};
    for (int c = 0; c < n; ++c) {
        for (int i = n - 1; i >= 0; --i) {
            Int s = dt * a(i, n + c);
            for (int j = i + 1; j < n; ++j) s -= a(i, j) * r.adj(j, c);
            r.adj(i, c) = s / a(i, i);
        }
    }
    return r;
}

RatMat inverse(const IntMat& m) {
    AdjResult r = adjugate(m);
    RatMat inv(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) inv(i, j) = make_rat(r.adj(i, j), r.det);
    return inv;
}

namespace {

// Smallest nonzero |entry| in the trailing submatrix starting at (t, t).
bool find_pivot(const IntMat& s, int t, int& pi, int& pj) {
    bool found = false;
    Int best;
    for (int i = t; i < s.rows(); ++i)
        for (int j = t; j < s.cols(); ++j) {
            if (s(i, j) == 0) continue;
            Int a = abs_int(s(i, j));
            if (!found || a < best) {
                best = a;
                pi = i;
                pj = j;
                found = true;
            }
        }
    return found;
}

void swap_rows(IntMat& m, int a, int b) {
    if (a == b) return;
    for (int j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMat& m, int a, int b) {
    if (a == b) return;
    for (int i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row[a] += q * row[b]
void add_row(IntMat& m, int a, int b, const Int& q) {
    for (int j = 0; j < m.cols(); ++j) m(a, j) += q * m(b, j);
}

void add_col(IntMat& m, int a, int b, const Int& q) {
    for (int i = 0; i < m.rows(); ++i) m(i, a) += q * m(i, b);
}

}  // namespace

SnfResult snf(const IntMat& b) {
    if (!b.square()) throw DimensionError("snf: matrix not square");
    const int n = b.rows();
    SnfResult r{IntMat::identity(n), b, IntMat::identity(n)};
    IntMat& s = r.s;
    IntMat& u = r.u;
    IntMat& v = r.v;

    for (int t = 0; t < n; ++t) {
        int pi, pj;
        if (!find_pivot(s, t, pi, pj)) throw SingularMatrixError("snf: singular matrix");
        for (;;) {
            swap_rows(s, t, pi);
            swap_rows(u, t, pi);
            swap_cols(s, t, pj);
            swap_cols(v, t, pj);

            bool clean = true;
            for (int i = t + 1; i < n; ++i) {
                if (s(i, t) == 0) continue;
                Int q = s(i, t) / s(t, t);  // truncated: |remainder| < |pivot|
                if (q != 0) {
                    add_row(s, i, t, -q);
                    add_row(u, i, t, -q);
                }
                if (s(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < n; ++j) {
                if (s(t, j) == 0) continue;
                Int q = s(t, j) / s(t, t);
                if (q != 0) {
                    add_col(s, j, t, -q);
                    add_col(v, j, t, -q);
                }
                if (s(t, j) != 0) clean = false;
            }
            if (!clean) {
                find_pivot(s, t, pi, pj);
                continue;
            }
            // Divisibility: pivot must divide the whole trailing block.
            int bi = -1;
            for (int i = t + 1; i < n && bi < 0; ++i)
                for (int j = t + 1; j < n; ++j)
                    if (s(i, j) % s(t, t) != 0) {
                        bi = i;
                        break;
                    }
            if (bi < 0) break;
            add_row(s, t, bi, Int(1));
            add_row(u, t, bi, Int(1));
            pi = t;
            pj = t;
            find_pivot(s, t, pi, pj);
        }
        if (s(t, t) < 0) {
            for (int j = 0; j < n; ++j) {
                s(t, j) = -s(t, j);
                u(t, j) = -u(t, j);
            }
        }
    }
    return r;
}

namespace {

struct GramSchmidt {
    std::vector<RatVec> bstar;
    std::vector<Rat> norms;  // <b*_i, b*_i>
    RatMat mu;

    explicit GramSchmidt(const IntMat& b) : mu(b.cols(), b.cols()) {
        const int n = b.cols();
        bstar.resize(n);
        norms.resize(n);
        for (int i = 0; i < n; ++i) {
            RatVec bi = to_rat(b.col(i));
            for (int j = 0; j < i; ++j) {
                if (norms[j] == 0) throw DependentColumnsError("lll: dependent columns");
                mu(i, j) = dot(bi, bstar[j]) / norms[j];
            }
            RatVec v = bi;
            for (int j = 0; j < i; ++j)
                for (int k = 0; k < int(v.size()); ++k) v[k] -= mu(i, j) * bstar[j][k];
            bstar[i] = v;
            norms[i] = dot(v, v);
            if (norms[i] == 0) throw DependentColumnsError("lll: dependent columns");
        }
    }
};

}  // namespace

// All-integer LLL with delta = 3/4: d_j are the Gram determinants, and
// lambda(i, j) = mu_ij * d_j stays integral throughout.
IntMat lll_reduce(const IntMat& basis) {
    IntMat b = basis;
    const int n = b.cols();
    if (n <= 1) return b;

    std::vector<Int> d(n + 1);
    d[0] = 1;
    IntMat lambda(n, n);
    auto col_dot = [&](int i, int j) {
        Int s;
        for (int r = 0; r < b.rows(); ++r) s += b(r, i) * b(r, j);
        return s;
    };
    auto init_gso = [&] {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j <= i; ++j) {
                Int u = col_dot(i, j);
                for (int k = 0; k < j; ++k)
                    u = (d[k + 1] * u - lambda(i, k) * lambda(j, k)) / d[k];
                if (j < i)
                    lambda(i, j) = u;
                else {
                    if (u == 0) throw DependentColumnsError("lll: dependent columns");
                    d[i + 1] = u;
                }
            }
        }
    };
    init_gso();

    auto reduce = [&](int k, int l) {
        // |mu_kl| > 1/2  <=>  2|lambda| > d_{l+1}
        if (2 * abs_int(lambda(k, l)) <= d[l + 1]) return;
        Int q = floor_rat(make_rat(2 * lambda(k, l) + d[l + 1], 2 * d[l + 1]));
        for (int r = 0; r < b.rows(); ++r) b(r, k) -= q * b(r, l);
        lambda(k, l) -= q * d[l + 1];
        for (int i = 0; i < l; ++i) lambda(k, i) -= q * lambda(l, i);
    };

    int k = 1;
    while (k < n) {
        reduce(k, k - 1);
        const Int lam = lambda(k, k - 1);
        if (4 * d[k + 1] * d[k - 1] < 3 * d[k] * d[k] - 4 * lam * lam) {
            for (int r = 0; r < b.rows(); ++r) std::swap(b(r, k), b(r, k - 1));
            for (int j = 0; j < k - 1; ++j) std::swap(lambda(k, j), lambda(k - 1, j));
            Int bb = (d[k - 1] * d[k + 1] + lam * lam) / d[k];
            for (int i = k + 1; i < n; ++i) {
                Int t = lambda(i, k);
                lambda(i, k) = (d[k + 1] * lambda(i, k - 1) - lam * t) / d[k];
                lambda(i, k - 1) = (bb * t + lam * lambda(i, k)) / d[k + 1];
            }
            d[k] = bb;
            k = std::max(k - 1, 1);
        } else {
            for (int l = k - 2; l >= 0; --l) reduce(k, l);
            ++k;
        }
    }
    return b;
}

bool is_lll_reduced(const IntMat& basis, const Rat& delta) {
    const int n = basis.cols();
    if (n <= 1) return true;
    GramSchmidt gs(basis);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (abs_rat(gs.mu(i, j)) > Rat(1, 2)) return false;
    for (int k = 1; k < n; ++k)
        if (gs.norms[k] < (delta - gs.mu(k, k - 1) * gs.mu(k, k - 1)) * gs.norms[k - 1])
            return false;
    return true;
}

int rank(const RatMat& m) {
    RatMat a = m;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int p = -1;
        for (int i = r; i < a.rows(); ++i)
            if (a(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        for (int j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(p, j));
        for (int i = r + 1; i < a.rows(); ++i) {
            if (a(i, c) == 0) continue;
            Rat f = a(i, c) / a(r, c);
            for (int j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        ++r;
    }
    return r;
}

int rank(const IntMat& m) { return rank(to_rat(m)); }

}  // namespace latcount

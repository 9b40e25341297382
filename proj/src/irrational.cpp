#include "latcount/irrational.hpp"

#include <mpfr.h>

#include "latcount/linalg.hpp"
#include "latcount/simplex_lp.hpp"

namespace latcount {

StabilityCube stability_cube_simplicial(const RatVec& v, const IntMat& b) {
    const int d = b.rows();
    RatMat bstar = dual_basis(b);
    Int index = abs_int(det(b));

    RatVec lambda_hat(d);
    Rat max_l1;
    for (int i = 0; i < d; ++i) {
        RatVec col(d);
        Rat l1;
        for (int r = 0; r < d; ++r) {
            col[r] = bstar(r, i);
            l1 += abs_rat(col[r]);
        }
        if (l1 > max_l1) max_l1 = l1;
        Rat lambda = dot(col, v);
        lambda_hat[i] = make_rat(floor_rat(Rat(index) * lambda) * 2 + 1, 2 * index);
    }

    StabilityCube cube;
    cube.center.resize(d);
    for (int r = 0; r < d; ++r) {
        Rat s;
        for (int i = 0; i < d; ++i) s += Rat(b(r, i)) * lambda_hat[i];
        cube.center[r] = -s;
    }
    cube.radius = Rat(1) / (Rat(2 * index) * max_l1);
    return cube;
}

StabilityCube stability_cube_lp(const RatVec& v, const IntMat& facet_normals) {
    const int d = facet_normals.cols();
    const int m = facet_normals.rows();
    // Variables (hv, rho); maximize rho subject to
    //   <n_i, hv> + ||n_i||_1 rho <= floor(<n_i, v>) + 1
    //  -<n_i, hv> + ||n_i||_1 rho <= -floor(<n_i, v>)
    RatMat g(2 * m, d + 1);
    RatVec h(2 * m), c(d + 1);
    for (int i = 0; i < m; ++i) {
        IntVec n = facet_normals.row(i);
        Int l1 = l1_norm(n);
        Int fl = floor_rat(dot(n, v));
        for (int j = 0; j < d; ++j) {
            g(2 * i, j) = Rat(n[j]);
            g(2 * i + 1, j) = Rat(-n[j]);
        }
        g(2 * i, d) = Rat(l1);
        g(2 * i + 1, d) = Rat(l1);
        h[2 * i] = Rat(fl + 1);
        h[2 * i + 1] = Rat(-fl);
    }
    c[d] = 1;
    LpResult r = solve_lp(g, h, c);
    if (r.status != LpStatus::Optimal || r.objective <= 0)
        throw Error("stability_cube_lp: malformed cone input");
    StabilityCube cube;
    cube.center.assign(r.x.begin(), r.x.begin() + d);
    cube.radius = r.x[d];
    return cube;
}

int depth_bound_k(const Int& index, int dim) {
    if (index <= 1 || dim <= 1) return 0;
    if (index == 2) return 1;

    // k = 1 + max{ j >= 0 : (d/(d-1))^j <= log2 D }, decided exactly.
    const std::size_t bits = mpz_sizeinbase(index.get_mpz_t(), 2);
    const Int t(static_cast<unsigned long>(bits - 1));  // floor(log2 D)
    Int pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(bits - 1));
    const bool power_of_two = (pow2 == index);

    Int num(1), den(1);  // (d/(d-1))^j
    int j = 0;
    for (;; ++j) {
        bool holds;
        if (num <= den * t) {
            holds = true;
        } else if (power_of_two || num >= den * (t + 1)) {
            holds = false;
        } else {
            // num/den lies strictly between floor and ceil of log2 D:
            // compare against directed-rounding brackets of log2 D.
            holds = false;
            bool decided = false;
            Rat q = make_rat(num, den);
            for (mpfr_prec_t prec = 128; prec <= (1 << 20); prec *= 2) {
                mpfr_t lo, hi;
                mpfr_init2(lo, prec);
                mpfr_init2(hi, prec);
                mpfr_set_z(lo, index.get_mpz_t(), MPFR_RNDD);
                mpfr_set_z(hi, index.get_mpz_t(), MPFR_RNDU);
                mpfr_log2(lo, lo, MPFR_RNDD);
                mpfr_log2(hi, hi, MPFR_RNDU);
                int cmp_lo = mpfr_cmp_q(lo, q.get_mpq_t());
                int cmp_hi = mpfr_cmp_q(hi, q.get_mpq_t());
                mpfr_clear(lo);
                mpfr_clear(hi);
                if (cmp_lo >= 0) {
                    holds = true;
                    decided = true;
                } else if (cmp_hi < 0) {
                    holds = false;
                    decided = true;
                }
                if (decided) break;
            }
            if (!decided) throw Error("depth_bound_k: precision exhausted");
        }
        if (!holds) break;
        num *= dim;
        den *= dim - 1;
    }
    return j;  // 1 + (j - 1)
}

ShiftParams make_shift(const StabilityCube& cube, const Int& index_bound,
                       const Int& entry_bound, int dim) {
    if (index_bound < 1 || entry_bound < 1 || cube.radius <= 0)
        throw Error("make_shift: invalid inputs");
    ShiftParams p;
    p.index_bound = index_bound;
    p.entry_bound = entry_bound;
    p.depth = depth_bound_k(index_bound, dim);

    Int dk(1);
    for (int i = 0; i < p.depth; ++i) dk *= dim;
    Int base = dk * entry_bound;
    Int fact(1);
    for (int i = 2; i <= dim - 1; ++i) fact *= i;
    Int pow(1);
    for (int i = 0; i < dim - 1; ++i) pow *= base;
    p.l = fact * pow;
    p.m = 2 * p.l;
    p.r = floor_rat(Rat(1) / cube.radius) + 1;

    p.s.resize(dim);
    Rat denom(1);
    const Rat two_m(2 * p.m);
    for (int i = 0; i < dim; ++i) {
        denom *= two_m;
        p.s[i] = Rat(1) / (Rat(p.r) * denom);
    }
    p.v_tilde = cube.center + p.s;
    return p;
}

Int index_bound_for_triangulation(const IntMat& generators) {
    const int n = generators.cols();
    Int maxsq(1);
    for (int j = 0; j < n; ++j) {
        Int s = norm2_sq(generators.col(j));
        if (s > maxsq) maxsq = s;
    }
    Int p(1);
    for (int i = 0; i < n; ++i) p *= maxsq;  // maxsq^n
    Int root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), p.get_mpz_t());
    if (rem != 0) root += 1;
    return root;
}

bool verify_irrational(const SimplicialCone& k) {
    const int d = k.basis.rows();
    // det(B) b*_i = -(adj B)_{i,.} is integral; with the apex over a common
    // denominator the test is a divisibility check.
    AdjResult ar = adjugate(k.basis);
    Int apex_den(1);
    for (const auto& x : k.apex) apex_den = lcm(apex_den, x.get_den());
    IntVec apex_num(d);
    for (int i = 0; i < d; ++i)
        apex_num[i] = k.apex[i].get_num() * (apex_den / k.apex[i].get_den());
    for (int i = 0; i < d; ++i) {
        Int dot_num;
        for (int r = 0; r < d; ++r) dot_num -= ar.adj(i, r) * apex_num[r];
        if (dot_num % apex_den == 0) return false;
    }
    return true;
}

}  // namespace latcount

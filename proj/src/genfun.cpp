#include "latcount/genfun.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace latcount {

GenFunTerm term_from_cone(const SimplicialCone& k, const ParallelepipedPoints& pts) {
    GenFunTerm t;
    t.sign = k.sign;
    t.numerator = pts.points;
    for (int j = 0; j < k.basis.cols(); ++j) t.denominator.push_back(k.basis.col(j));
    return t;
}

SubstitutionContext pick_lambda(const GenFun& g, unsigned long seed) {
    const int d = g.dim;
    std::mt19937_64 rng(seed);
    long long t_range = 1;
    Int s;
    for (int attempt = 0; attempt < 1000; ++attempt) {
        IntVec lambda(d);
        std::uniform_int_distribution<long long> dist(-d * t_range, d * t_range);
        for (int i = 0; i < d; ++i) lambda[i] = Int(static_cast<long>(dist(rng)));
        bool ok = true;
        for (const auto& t : g.terms) {
            for (const auto& b : t.denominator) {
                s = 0;
                for (int i = 0; i < d; ++i) s += lambda[i] * b[i];
                if (s == 0) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
        }
        if (ok) return SubstitutionContext{lambda, d};
        t_range *= 2;
    }
    throw GenericityError("pick_lambda: no generic direction found");
}

namespace {

// Dense integer power series truncated at a fixed order.
struct ZSeries {
    std::vector<Int> c;

    explicit ZSeries(int order) : c(order + 1) {}

    int order() const { return int(c.size()) - 1; }

    ZSeries mul(const ZSeries& o) const {
        ZSeries r(order());
        for (int i = 0; i <= order(); ++i) {
            if (c[i] == 0) continue;
            for (int j = 0; i + j <= order(); ++j) {
                if (o.c[j] == 0) continue;
                r.c[i + j] += c[i] * o.c[j];
            }
        }
        return r;
    }
};

// Coefficient of x^order in num/den as a series about 0; den must have a
// nonzero constant term.
Rat series_quotient_coeff(const ZSeries& num, const ZSeries& den, int order) {
    if (den.c[0] == 0) throw Error("series division: zero constant term");
    RatVec q(order + 1);
    for (int k = 0; k <= order; ++k) {
        Rat s(num.c[k]);
        for (int i = 1; i <= k; ++i) {
            if (den.c[i] == 0) continue;
            s -= Rat(den.c[i]) * q[k - i];
        }
        q[k] = s / Rat(den.c[0]);
    }
    return q[order];
}

// (1+s)^e truncated: sum_k C(e, k) s^k for integer e >= 0.
ZSeries binom_power(const Int& e, int order) {
    ZSeries r(order);
    r.c[0] = 1;
    Int coeff(1);
    for (int k = 1; k <= order; ++k) {
        coeff *= e - (k - 1);
        coeff /= k;  // exact: C(e, k)
        r.c[k] = coeff;
        if (coeff == 0) break;
    }
    return r;
}

Int factorial_int(int n) {
    Int f(1);
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

Int count_exponential(const GenFun& g, const SubstitutionContext& ctx) {
    const int d = g.dim;
    // Per term, with xi_j = <lambda, b_j> and alpha_a = <lambda, a>:
    //   contribution = eps [tau^d] ( sum_a e^{alpha_a tau} prod_j S_j^{-1} )
    //                      / prod_j (-xi_j),
    //   S_j = sum_k xi_j^k tau^k / (k+1)!.
    // Denominators are cleared: St_j = (d+1)! S_j and Nt = d! N are integer
    // series, so only the final series division is rational.
    const Int fd = factorial_int(d);
    const Int fd1 = factorial_int(d + 1);
    std::vector<Int> f_den(d + 1), f_num(d + 1);  // (d+1)!/(k+1)! and d!/k!
    for (int k = 0; k <= d; ++k) {
        f_den[k] = fd1 / factorial_int(k + 1);
        f_num[k] = fd / factorial_int(k);
    }
    Rat total;
    for (const auto& term : g.terms) {
        ZSeries prod(d);
        prod.c[0] = 1;
        Rat denom_prod(1);
        Rat clear(1);  // product of the (d+1)! clearings
        for (const auto& b : term.denominator) {
            Rat xir = dot(ctx.lambda, to_rat(b));
            if (xir == 0) throw GenericityError("count_exponential: lambda not generic");
            Int xi = xir.get_num();
            denom_prod *= Rat(-xi);
            clear *= Rat(fd1);
            ZSeries s(d);
            Int p(1);
            for (int k = 0; k <= d; ++k) {
                s.c[k] = p * f_den[k];
                p *= xi;
            }
            prod = prod.mul(s);
        }
        ZSeries numer(d);
        for (const auto& a : term.numerator) {
            Rat ar = dot(ctx.lambda, to_rat(a));
            Int alpha = ar.get_num();
            Int p(1);
            for (int k = 0; k <= d; ++k) {
                numer.c[k] += p * f_num[k];
                p *= alpha;
            }
        }
        Rat coeff = series_quotient_coeff(numer, prod, d);
        total += Rat(term.sign) * coeff * clear / (Rat(fd) * denom_prod);
    }
    if (!is_integer(total))
        throw GenericityError("count_exponential: non-integer total " + to_string(total));
    return total.get_num();
}

Int count_polynomial(const GenFun& g, const SubstitutionContext& ctx) {
    const int d = g.dim;
    Rat total;
    for (const auto& term : g.terms) {
        // Each factor 1 - (1+s)^xi contributes a simple zero at s = 0:
        //   xi > 0: -s * P_xi(s), xi < 0: s * P_{-xi}(s) / (1+s)^{-xi},
        // with P_k(s) = ((1+s)^k - 1)/s of nonzero constant term k.
        int sign_flips = 0;
        Int extra_num_exp(0);
        ZSeries den(d);
        den.c[0] = 1;
        for (const auto& b : term.denominator) {
            Rat xir = dot(ctx.lambda, to_rat(b));
            if (xir == 0) throw GenericityError("count_polynomial: lambda not generic");
            Int xi = xir.get_num();
            Int axi = abs_int(xi);
            if (xi > 0)
                sign_flips++;
            else
                extra_num_exp += axi;
            // P(s) = ((1+s)^axi - 1) / s
            ZSeries shifted(d);
            ZSeries full = binom_power(axi, d + 1);
            for (int k = 0; k <= d; ++k) shifted.c[k] = full.c[k + 1];
            den = den.mul(shifted);
        }

        Int min_alpha(0);
        std::vector<Int> alphas;
        for (const auto& a : term.numerator) {
            Rat ar = dot(ctx.lambda, to_rat(a));
            alphas.push_back(ar.get_num());
            if (alphas.back() < min_alpha) min_alpha = alphas.back();
        }
        Int lift = min_alpha < 0 ? Int(-min_alpha) : Int(0);

        ZSeries num(d);
        for (const auto& alpha : alphas) {
            ZSeries p = binom_power(alpha + lift + extra_num_exp, d);
            for (int k = 0; k <= d; ++k) num.c[k] += p.c[k];
        }
        if (lift > 0) den = den.mul(binom_power(lift, d));

        Rat contrib = series_quotient_coeff(num, den, d);
        if (sign_flips % 2 == 1) contrib = -contrib;
        total += Rat(term.sign) * contrib;
    }
    if (!is_integer(total))
        throw GenericityError("count_polynomial: non-integer total " + to_string(total));
    return total.get_num();
}

namespace {

std::string vec_to_text(const IntVec& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s;
}

IntVec vec_from_text(const std::string& s, int expect_dim) {
    IntVec v;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) throw Error("genfun parse: empty vector entry");
        v.emplace_back(cur);
        cur.clear();
    };
    for (char ch : s) {
        if (ch == ',')
            flush();
        else if (ch == '-' || (ch >= '0' && ch <= '9'))
            cur += ch;
        else
            throw Error(std::string("genfun parse: bad character '") + ch + "'");
    }
    flush();
    if (expect_dim > 0 && int(v.size()) != expect_dim)
        throw Error("genfun parse: vector dimension mismatch");
    return v;
}

std::vector<std::string> split(const std::string& s, const std::string& sep) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    for (;;) {
        std::size_t next = s.find(sep, pos);
        if (next == std::string::npos) {
            parts.push_back(s.substr(pos));
            return parts;
        }
        parts.push_back(s.substr(pos, next - pos));
        pos = next + sep.size();
    }
}

}  // namespace

std::string to_text(const GenFun& g) {
    std::string out;
    for (const auto& t : g.terms) {
        out += t.sign > 0 ? "+" : "-";
        out += " ;";
        for (const auto& a : t.numerator) {
            out += " ";
            out += vec_to_text(a);
        }
        out += " ;";
        for (std::size_t j = 0; j < t.denominator.size(); ++j) {
            out += j ? " | " : " ";
            out += vec_to_text(t.denominator[j]);
        }
        out += "\n";
    }
    return out;
}

GenFun genfun_from_text(const std::string& text) {
    GenFun g;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto sections = split(line, " ; ");
        if (sections.size() != 3) throw Error("genfun parse: expected three sections");
        GenFunTerm t;
        if (sections[0] == "+")
            t.sign = +1;
        else if (sections[0] == "-")
            t.sign = -1;
        else
            throw Error("genfun parse: bad sign '" + sections[0] + "'");
        for (const auto& tok : split(sections[1], " "))
            t.numerator.push_back(vec_from_text(tok, g.dim));
        for (const auto& tok : split(sections[2], " | "))
            t.denominator.push_back(vec_from_text(tok, g.dim));
        if (g.dim == 0 && !t.denominator.empty()) g.dim = int(t.denominator[0].size());
        for (const auto& v : t.numerator)
            if (int(v.size()) != g.dim) throw Error("genfun parse: dimension mismatch");
        for (const auto& v : t.denominator)
            if (int(v.size()) != g.dim) throw Error("genfun parse: dimension mismatch");
        g.terms.push_back(std::move(t));
    }
    return g;
}

}  // namespace latcount

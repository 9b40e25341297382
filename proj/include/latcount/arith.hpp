#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace latcount {

// Arbitrary-precision scalars. mpq_class keeps values canonical (lowest
// terms, positive denominator) as long as construction goes through
// make_rat / arithmetic operators.
using Int = mpz_class;
using Rat = mpq_class;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DimensionError : Error {
    using Error::Error;
};
struct SingularMatrixError : Error {
    using Error::Error;
};
struct DependentColumnsError : Error {
    using Error::Error;
};

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw Error("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Int num(const Rat& r) { return r.get_num(); }
inline Int den(const Rat& r) { return r.get_den(); }

inline Int floor_rat(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

inline Int ceil_rat(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

// Nearest integer, halves rounded down (floor(r + 1/2)).
inline Int round_rat(const Rat& r) { return floor_rat(r + Rat(1, 2)); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Int abs_int(const Int& a) { return a >= 0 ? a : Int(-a); }
inline Rat abs_rat(const Rat& r) { return r >= 0 ? r : Rat(-r); }

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline RatVec to_rat(const IntVec& v) {
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

template <typename T>
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {
        if (rows < 0 || cols < 0) throw DimensionError("Mat: negative dimension");
    }
    Mat(int rows, int cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), a_(std::move(entries)) {
        if (a_.size() != std::size_t(rows) * cols)
            throw DimensionError("Mat: entry count does not match shape");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

    std::vector<T> col(int j) const {
        std::vector<T> c(rows_);
        for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }
    std::vector<T> row(int i) const {
        std::vector<T> r(cols_);
        for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }
    void set_col(int j, const std::vector<T>& c) {
        if (int(c.size()) != rows_) throw DimensionError("set_col: length mismatch");
        for (int i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Mat from_cols(const std::vector<std::vector<T>>& cols) {
        if (cols.empty()) return Mat(0, 0);
        Mat m(int(cols[0].size()), int(cols.size()));
        for (int j = 0; j < m.cols(); ++j) {
            if (cols[j].size() != cols[0].size())
                throw DimensionError("from_cols: ragged columns");
            m.set_col(j, cols[j]);
        }
        return m;
    }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

  private:
    int rows_, cols_;
    std::vector<T> a_;
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

inline RatMat to_rat(const IntMat& m) {
    RatMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

template <typename T>
Mat<T> transpose(const Mat<T>& m) {
    Mat<T> t(m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
    return t;
}

template <typename T>
Mat<T> operator*(const Mat<T>& a, const Mat<T>& b) {
    if (a.cols() != b.rows()) throw DimensionError("Mat*: shape mismatch");
    Mat<T> c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

template <typename T>
std::vector<T> operator*(const Mat<T>& a, const std::vector<T>& x) {
    if (a.cols() != int(x.size())) throw DimensionError("Mat*vec: shape mismatch");
    std::vector<T> y(a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
    return y;
}

inline RatVec mul(const RatMat& a, const RatVec& x) { return a * x; }

inline RatVec mul(const IntMat& a, const RatVec& x) {
    if (a.cols() != int(x.size())) throw DimensionError("IntMat*RatVec: shape mismatch");
    RatVec y(a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) y[i] += Rat(a(i, j)) * x[j];
    return y;
}

template <typename T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
    T s{};
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dot(const IntVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
    Rat s;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

template <typename T>
std::vector<T> operator+(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.size() != b.size()) throw DimensionError("vec+: length mismatch");
    std::vector<T> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

template <typename T>
std::vector<T> operator-(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.size() != b.size()) throw DimensionError("vec-: length mismatch");
    std::vector<T> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

inline Int l1_norm(const IntVec& v) {
    Int s;
    for (const auto& x : v) s += abs_int(x);
    return s;
}

inline Rat l1_norm(const RatVec& v) {
    Rat s;
    for (const auto& x : v) s += abs_rat(x);
    return s;
}

inline Rat linf_norm(const RatVec& v) {
    Rat m;
    for (const auto& x : v) {
        Rat a = abs_rat(x);
        if (a > m) m = a;
    }
    return m;
}

inline Int norm2_sq(const IntVec& v) {
    Int s;
    for (const auto& x : v) s += x * x;
    return s;
}

// Divides an integer vector by the gcd of its entries. Direction preserved.
inline IntVec primitive(const IntVec& v) {
    Int g;
    for (const auto& x : v) g = gcd(g, x);
    if (g == 0) return v;
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

inline bool is_primitive(const IntVec& v) {
    Int g;
    for (const auto& x : v) g = gcd(g, x);
    return g == 1;
}

// Clears denominators: smallest positive multiple of v that is integral.
inline IntVec scale_to_integer(const RatVec& v) {
    Int m(1);
    for (const auto& x : v) m = lcm(m, x.get_den());
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rat s = v[i] * Rat(m);
        r[i] = s.get_num();
    }
    return r;
}

inline std::string to_string(const Int& x) { return x.get_str(); }
inline std::string to_string(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

template <typename T>
std::string to_string(const std::vector<T>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += to_string(v[i]);
    }
    return s + ")";
}

}  // namespace latcount

#include <doctest.h>

#include "latcount/linalg.hpp"
#include "oracles.hpp"

using namespace latcount;

namespace {

IntMat cols2(long a1, long a2, long b1, long b2) {
    IntMat m(2, 2);
    m(0, 0) = a1;
    m(1, 0) = a2;
    m(0, 1) = b1;
    m(1, 1) = b2;
    return m;
}

}  // namespace

TEST_CASE("det: identity and small cases") {
    CHECK(det(IntMat::identity(3)) == 1);
    CHECK(det(cols2(1, 0, 1, 5)) == 5);
    CHECK(det(cols2(2, 0, 0, 3)) == 6);
    CHECK_THROWS_AS(det(IntMat(2, 3)), DimensionError);
}

TEST_CASE("det matches cofactor oracle on random 4x4") {
    oracles::Rng rng(11);
    for (int t = 0; t < 100; ++t) {
        IntMat m = oracles::random_int_matrix(rng, 4, 4, -9, 9);
        CHECK(det(m) == oracles::det_cofactor(m));
    }
}

TEST_CASE("inverse: examples") {
    CHECK(inverse(IntMat::identity(3)) == to_rat(IntMat::identity(3)));

    IntMat m = cols2(1, 0, 1, 5);
    RatMat inv = inverse(m);
    CHECK(inv(0, 0) == Rat(1));
    CHECK(inv(0, 1) == Rat(-1, 5));
    CHECK(inv(1, 0) == Rat(0));
    CHECK(inv(1, 1) == Rat(1, 5));
    CHECK(to_rat(m) * inv == to_rat(IntMat::identity(2)));

    IntMat d = cols2(2, 0, 0, 3);
    RatMat dinv = inverse(d);
    CHECK(dinv(0, 0) == Rat(1, 2));
    CHECK(dinv(1, 1) == Rat(1, 3));

    IntMat sing = cols2(1, 2, 2, 4);
    CHECK_THROWS_AS(inverse(sing), SingularMatrixError);
}

TEST_CASE("det(inverse) = 1/det") {
    oracles::Rng rng(12);
    for (int t = 0; t < 30; ++t) {
        IntMat m = oracles::random_int_matrix(rng, 3, 3, -9, 9);
        Int dt = det(m);
        if (dt == 0) continue;
        RatMat inv = inverse(m);
        // det over rationals by elimination on the rational inverse
        RatMat a = inv;
        Rat p(1);
        for (int k = 0; k < 3; ++k) {
            int piv = -1;
            for (int i = k; i < 3; ++i)
                if (a(i, k) != 0) {
                    piv = i;
                    break;
                }
            REQUIRE(piv >= 0);
            if (piv != k) {
                for (int j = 0; j < 3; ++j) std::swap(a(k, j), a(piv, j));
                p = -p;
            }
            p *= a(k, k);
            for (int i = k + 1; i < 3; ++i) {
                Rat f = a(i, k) / a(k, k);
                for (int j = k; j < 3; ++j) a(i, j) -= f * a(k, j);
            }
        }
        CHECK(p == Rat(1) / Rat(dt));
    }
}

TEST_CASE("snf: examples") {
    SnfResult r = snf(IntMat::identity(3));
    CHECK(r.s == IntMat::identity(3));

    IntMat m(2, 2);
    m(0, 0) = 1;
    m(0, 1) = 1;
    m(1, 0) = 0;
    m(1, 1) = 2;
    r = snf(m);
    CHECK(r.s(0, 0) == 1);
    CHECK(r.s(1, 1) == 2);
    CHECK(r.u * m * r.v == r.s);

    IntMat d = cols2(4, 0, 0, 6);
    r = snf(d);
    CHECK(r.s(0, 0) == 2);
    CHECK(r.s(1, 1) == 12);
    CHECK(r.s(0, 0) * r.s(1, 1) == 24);

    CHECK_THROWS_AS(snf(cols2(1, 2, 2, 4)), SingularMatrixError);
}

TEST_CASE("snf invariants on 200 random matrices") {
    oracles::Rng rng(13);
    int done = 0;
    while (done < 200) {
        int d = int(rng.uniform(1, 6));
        IntMat m = oracles::random_int_matrix(rng, d, d, -20, 20);
        Int dt = oracles::det_cofactor(m);
        if (dt == 0) continue;
        ++done;
        SnfResult r = snf(m);
        CHECK(r.u * m * r.v == r.s);
        CHECK(abs_int(det(r.u)) == 1);
        CHECK(abs_int(det(r.v)) == 1);
        Int prod(1);
        for (int i = 0; i < d; ++i) {
            CHECK(r.s(i, i) > 0);
            if (i + 1 < d) CHECK(r.s(i + 1, i + 1) % r.s(i, i) == 0);
            for (int j = 0; j < d; ++j)
                if (i != j) CHECK(r.s(i, j) == 0);
            prod *= r.s(i, i);
        }
        CHECK(prod == abs_int(dt));
    }
}

TEST_CASE("lll_reduce: examples") {
    CHECK(lll_reduce(IntMat::identity(3)) == IntMat::identity(3));

    IntMat m = cols2(1, 0, 4, 1);
    IntMat r = lll_reduce(m);
    CHECK(abs_int(det(r)) == 1);
    for (int j = 0; j < 2; ++j) CHECK(norm2_sq(r.col(j)) <= 2);
    CHECK(is_lll_reduced(r, Rat(3, 4)));
    CHECK(oracles::hnf_columns(m) == oracles::hnf_columns(r));

    IntMat dep(2, 2);
    dep(0, 0) = 1;
    dep(1, 0) = 2;
    dep(0, 1) = 2;
    dep(1, 1) = 4;
    CHECK_THROWS_AS(lll_reduce(dep), DependentColumnsError);
}

TEST_CASE("lll_reduce: unimodular transforms of the identity, d = 4") {
    oracles::Rng rng(14);
    for (int t = 0; t < 20; ++t) {
        IntMat m = oracles::random_unimodular(rng, 4, 12);
        IntMat r = lll_reduce(m);
        CHECK(abs_int(det(r)) == 1);
        CHECK(is_lll_reduced(r, Rat(3, 4)));
        CHECK(oracles::hnf_columns(m) == oracles::hnf_columns(r));
        Int in_max(0), out_max(0);
        for (int j = 0; j < 4; ++j) {
            in_max = std::max(in_max, norm2_sq(m.col(j)));
            out_max = std::max(out_max, norm2_sq(r.col(j)));
        }
        CHECK(out_max <= in_max);
    }
}

TEST_CASE("lll_reduce preserves the lattice on random bases") {
    oracles::Rng rng(15);
    for (int t = 0; t < 40; ++t) {
        int d = int(rng.uniform(2, 5));
        IntMat m = oracles::random_int_matrix(rng, d, d, -9, 9);
        if (oracles::det_cofactor(m) == 0) continue;
        IntMat r = lll_reduce(m);
        CHECK(abs_int(det(r)) == abs_int(det(m)));
        CHECK(oracles::hnf_columns(m) == oracles::hnf_columns(r));
        CHECK(is_lll_reduced(r, Rat(3, 4)));
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hypershell/cyclo.hpp"

using namespace hypershell;

TEST_CASE("root_of_unity basics") {
    CHECK(CycNum::root_of_unity(1, 0) == CycNum::one());
    CHECK(CycNum::root_of_unity(5, 0) == CycNum::one());
    // 1 + z3 + z3^2 = 0
    CycNum z3 = CycNum::root_of_unity(3, 1);
    CHECK((CycNum::one() + z3 + z3 * z3).is_zero());
    // (z8 + z8^-1)^2 = 2
    CycNum s = CycNum::root_of_unity(8, 1) + CycNum::root_of_unity(8, -1);
    CHECK(s * s == CycNum(2));
    // z5 + z5^2 + z5^3 + z5^4 + 1 = 0
    CycNum acc = CycNum::one();
    for (long k = 1; k < 5; ++k) acc += CycNum::root_of_unity(5, k);
    CHECK(acc.is_zero());
    // distinct basis elements
    CHECK(CycNum::root_of_unity(7, 1) != CycNum::root_of_unity(7, 2));
    // conductor normalization: zeta_6 = -zeta_3^2
    CHECK(CycNum::root_of_unity(6, 1) == -(z3 * z3));
    CHECK(CycNum::root_of_unity(6, 1).conductor() == 3);
}

TEST_CASE("lift") {
    CHECK(CycNum::one().lift(12) == CycNum::one());
    CycNum z3 = CycNum::root_of_unity(3, 1);
    CHECK(z3.lift(12).conductor() == 12);
    CHECK(z3.lift(12) == CycNum::root_of_unity(12, 4));
    // zeta_3 = zeta_6^2
    CHECK(z3 == CycNum::root_of_unity(6, 2));
    // sqrt2 lifted to conductor 24 equals z24^3 + z24^-3
    CycNum s2 = CycNum::root_of_unity(8, 1) + CycNum::root_of_unity(8, -1);
    CHECK(s2.lift(24) == CycNum::root_of_unity(24, 3) + CycNum::root_of_unity(24, -3));
    CHECK_THROWS(z3.lift(8));
}

TEST_CASE("ring axioms on random values") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3), exp(0, 30);
    auto rand_cyc = [&](long N) {
        CycNum x;
        for (int t = 0; t < 3; ++t) {
            mpq_class c(num(rng), den(rng));
            c.canonicalize();
            x += CycNum(c) * CycNum::root_of_unity(N, exp(rng));
        }
        return x;
    };
    for (long N : {5L, 12L, 21L, 36L}) {
        for (int it = 0; it < 8; ++it) {
            CycNum a = rand_cyc(N), b = rand_cyc(N), c = rand_cyc(N);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK(a * a.inverse() == CycNum::one());
            CHECK(a.conj().conj() == a);
            CHECK((a * b).conj() == a.conj() * b.conj());
        }
    }
}

TEST_CASE("galois automorphisms") {
    // rationals are fixed
    CHECK(CycNum(mpq_class(7, 3)).lift(12).galois(5) == CycNum(mpq_class(7, 3)));
    // sqrt2 -> -sqrt2 under zeta_8 -> zeta_8^3
    CycNum s2 = CycNum::root_of_unity(8, 1) + CycNum::root_of_unity(8, -1);
    CHECK(s2.galois(3) == -s2);
    // composition: galois(k) . galois(l) = galois(k*l mod N)
    std::mt19937 rng(99);
    for (long N : {12L, 21L}) {
        auto ks = coprime_residues(N);
        CycNum x = CycNum::root_of_unity(N, 1) + CycNum(3) * CycNum::root_of_unity(N, 5);
        for (long k : ks)
            for (long l : ks)
                CHECK(x.galois(l).galois(k) == x.galois((k * l) % N));
        // conj commutes with every galois map
        for (long k : ks) CHECK(x.conj().galois(k) == x.galois(k).conj());
    }
}

TEST_CASE("sqrt_integer is the positive root") {
    for (long n : {2L, 3L, 5L, 6L, 7L, 14L, 15L, 21L}) {
        CycNum s = CycNum::sqrt_integer(n);
        CHECK(s * s == CycNum(n));
        CHECK(s.is_real());
        CHECK(s.real_sign() == 1);
    }
    CHECK(CycNum::sqrt_integer(4) == CycNum(2));
    CHECK(CycNum::sqrt_integer(18) == CycNum(3) * CycNum::sqrt_integer(2));
}

TEST_CASE("real_sign") {
    CHECK(CycNum::zero().real_sign() == 0);
    // sqrt6 - 2 > 0
    CHECK((CycNum::sqrt_integer(6) - CycNum(2)).real_sign() == 1);
    CHECK((CycNum(2) - CycNum::sqrt_integer(6)).real_sign() == -1);
    // a value very close to zero but nonzero: sqrt(2) - 239/169 ~ 4.4e-5 > 0
    CycNum close = CycNum::sqrt_integer(2) - CycNum(mpq_class(239, 169));
    CHECK(close.real_sign() == 1);
    // and the interval evaluation agrees with the sign at 128 bits
    CHECK(close.real_interval(128).sign() == 1);
}

TEST_CASE("min_poly") {
    auto p1 = min_poly(CycNum::one());
    CHECK(p1 == std::vector<mpq_class>{mpq_class(-1), mpq_class(1)});
    // sqrt2: X^2 - 2
    auto p2 = min_poly(CycNum::sqrt_integer(2));
    CHECK(p2 == std::vector<mpq_class>{mpq_class(-2), mpq_class(0), mpq_class(1)});
    // 3(11 + 2 sqrt6): derived oracle = (X - r1)(X - r2) with r2 the conjugate
    CycNum r1 = CycNum(3) * (CycNum(11) + CycNum(2) * CycNum::sqrt_integer(6));
    CycNum r2 = CycNum(3) * (CycNum(11) - CycNum(2) * CycNum::sqrt_integer(6));
    CycNum sum = r1 + r2, prod = r1 * r2;
    CHECK(sum == CycNum(66));
    CHECK(prod == CycNum(873));
    auto p3 = min_poly(r1);
    CHECK(p3 == std::vector<mpq_class>{prod.rational_value(), -sum.rational_value(), mpq_class(1)});
    // min_poly evaluated at x is zero
    for (const CycNum& x : {CycNum::sqrt_integer(21), CycNum::root_of_unity(7, 1) + CycNum::root_of_unity(7, -1)}) {
        auto mp = min_poly(x);
        CycNum acc;
        for (size_t i = 0; i < mp.size(); ++i) acc += CycNum(mp[i]) * x.pow((long)i);
        CHECK(acc.is_zero());
    }
}

TEST_CASE("reduced finds the minimal conductor") {
    CycNum x = CycNum::root_of_unity(12, 4);  // = zeta_3
    CHECK(x.reduced().conductor() == 3);
    CycNum y = CycNum::sqrt_integer(5).lift(60);
    CHECK(y.reduced().conductor() == 5);
    CHECK(y.reduced() == CycNum::sqrt_integer(5));
}

TEST_CASE("as_root_of_unity") {
    long k, M;
    CHECK(CycNum::one().as_root_of_unity(k, M));
    CHECK((k == 0 || M == 1));
    CycNum z = CycNum::root_of_unity(12, 5);
    CHECK(z.as_root_of_unity(k, M));
    CHECK(M == 12);
    CHECK(k == 5);
    CHECK((-z).as_root_of_unity(k, M));
    CHECK(M == 12);
    CHECK(k == 11);
    // for odd conductor the order-2N roots appear
    CHECK((-CycNum::root_of_unity(5, 1)).as_root_of_unity(k, M));
    CHECK(M == 10);
    CHECK(k == 7);
    CHECK(!(CycNum::sqrt_integer(2)).as_root_of_unity(k, M));
    CHECK(!(CycNum::root_of_unity(5, 1) + CycNum(1)).as_root_of_unity(k, M));
}

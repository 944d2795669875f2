#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hypershell/interval.hpp"

namespace hypershell {

long euler_phi(long n);
long gcd_long(long a, long b);
long lcm_long(long a, long b);

/// Exact element of the cyclotomic field Q(zeta_N), stored as a coefficient
/// vector over the power basis {zeta^i : 0 <= i < phi(N)} reduced modulo the
/// N-th cyclotomic polynomial. Canonical form is unique, so equality and the
/// zero test are exact. Conductors are kept in normalized form (1, odd, or
/// divisible by 4); mixed-conductor arithmetic lifts to the lcm.
///
/// Values are immutable after construction and safe to share across threads.
class CycNum {
public:
    CycNum();  // zero in Q
    explicit CycNum(const mpq_class& q);
    explicit CycNum(long n);

    static CycNum zero() { return CycNum(); }
    static CycNum one() { return CycNum(1); }
    /// zeta_N^k, canonical form; root_of_unity(N, 0) == 1 for any N >= 1
    static CycNum root_of_unity(long N, long k);
    /// sqrt of a nonnegative integer as the positive real cyclotomic number
    static CycNum sqrt_integer(long n);

    long conductor() const { return N_; }
    const std::vector<mpq_class>& coeffs() const { return a_; }

    /// same number at conductor M (requires conductor() | M after normalization)
    CycNum lift(long M) const;
    /// rewrite at the minimal conductor
    CycNum reduced() const;

    CycNum operator+(const CycNum&) const;
    CycNum operator-(const CycNum&) const;
    CycNum operator*(const CycNum&) const;
    CycNum operator/(const CycNum&) const;
    CycNum operator-() const;
    CycNum& operator+=(const CycNum& o) { *this = *this + o; return *this; }
    CycNum& operator-=(const CycNum& o) { *this = *this - o; return *this; }
    CycNum& operator*=(const CycNum& o) { *this = *this * o; return *this; }

    CycNum inverse() const;  // throws on zero
    CycNum conj() const;     // zeta -> zeta^{-1}
    /// field automorphism zeta -> zeta^k, requires gcd(k, N) = 1
    CycNum galois(long k) const;
    CycNum pow(long e) const;
    CycNum norm2() const { return *this * conj(); }  // |x|^2
    CycNum real_part() const;                        // (x + conj x)/2

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    mpq_class rational_value() const;  // requires is_rational()
    bool is_real() const;              // conj(x) == x
    /// is x a root of unity in this field? returns exponent pair (k, M) with
    /// x = zeta_M^k (M = N or 2N), reduced; false if not
    bool as_root_of_unity(long& k, long& M) const;

    bool operator==(const CycNum&) const;
    bool operator!=(const CycNum& o) const { return !(*this == o); }

    /// exact sign of a real cyclotomic number (certified interval refinement,
    /// starting at 64 bits and doubling; zero decided symbolically first)
    int real_sign() const;

    /// certified enclosure of the real part / imaginary part under
    /// zeta_N -> e^{2 pi i/N}
    RealInterval real_interval(long prec) const;
    RealInterval imag_interval(long prec) const;
    double approx_real() const;
    double approx_imag() const;

    std::string str() const;           // human-readable
    void key_append(std::string& out) const;  // canonical bytes for hashing

    std::size_t hash() const;

private:
    long N_;                      // normalized conductor
    std::vector<mpq_class> a_;    // size phi(N_)
    CycNum(long N, std::vector<mpq_class> a) : N_(N), a_(std::move(a)) {}
    friend struct CycloContext;
    static void align(const CycNum& x, const CycNum& y, CycNum& xl, CycNum& yl);
};

/// monic minimal polynomial of x over Q, ascending coefficients
std::vector<mpq_class> min_poly(const CycNum& x);

/// the units k mod N, ascending
std::vector<long> coprime_residues(long N);

}  // namespace hypershell

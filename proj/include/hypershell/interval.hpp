#pragma once

#include <mpfr.h>
#include <gmpxx.h>
#include <string>

namespace hypershell {

/// Closed interval [lo, hi] with MPFR endpoints and outward rounding.
/// Refinement means re-evaluating the source expression at higher precision,
/// never widening an existing interval.
class RealInterval {
public:
    RealInterval();
    explicit RealInterval(long prec);
    RealInterval(const RealInterval&);
    RealInterval(RealInterval&&) noexcept;
    RealInterval& operator=(const RealInterval&);
    RealInterval& operator=(RealInterval&&) noexcept;
    ~RealInterval();

    static RealInterval from_rational(const mpq_class& q, long prec);
    static RealInterval zero(long prec);
    /// certified enclosure of cos(2*pi*k/n)
    static RealInterval cos2pi(long k, long n, long prec);
    /// certified enclosure of sin(2*pi*k/n)
    static RealInterval sin2pi(long k, long n, long prec);
    static RealInterval pi(long prec);

    RealInterval operator+(const RealInterval&) const;
    RealInterval operator-(const RealInterval&) const;
    RealInterval operator*(const RealInterval&) const;
    RealInterval operator/(const RealInterval&) const;  // requires 0 not in divisor
    RealInterval operator-() const;
    RealInterval sqrt() const;  // requires lo >= 0

    void add_assign(const RealInterval&);

    /// +1 if lo > 0, -1 if hi < 0, 0 if the interval contains 0
    int sign() const;
    bool contains_zero() const;
    double midpoint() const;
    double width() const;
    long precision() const { return prec_; }

    std::string str() const;

private:
    mpfr_t lo_, hi_;
    long prec_;
    void init(long prec);
    static RealInterval trig2pi(long k, long n, long prec, bool want_sin);
};

}  // namespace hypershell

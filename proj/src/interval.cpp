#include "hypershell/interval.hpp"

#include <stdexcept>
#include <sstream>
#include <algorithm>

namespace hypershell {

void RealInterval::init(long prec) {
    prec_ = prec;
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
}

RealInterval::RealInterval() { init(64); mpfr_set_zero(lo_, 1); mpfr_set_zero(hi_, 1); }
RealInterval::RealInterval(long prec) { init(prec); mpfr_set_zero(lo_, 1); mpfr_set_zero(hi_, 1); }

RealInterval::RealInterval(const RealInterval& o) {
    init(o.prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

RealInterval::RealInterval(RealInterval&& o) noexcept {
    prec_ = o.prec_;
    mpfr_init2(lo_, 2);
    mpfr_init2(hi_, 2);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

RealInterval& RealInterval::operator=(const RealInterval& o) {
    if (this == &o) return *this;
    mpfr_set_prec(lo_, o.prec_);
    mpfr_set_prec(hi_, o.prec_);
    prec_ = o.prec_;
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
    return *this;
}

RealInterval& RealInterval::operator=(RealInterval&& o) noexcept {
    prec_ = o.prec_;
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
}

RealInterval::~RealInterval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

RealInterval RealInterval::from_rational(const mpq_class& q, long prec) {
    RealInterval r(prec);
    mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
    return r;
}

RealInterval RealInterval::zero(long prec) { return RealInterval(prec); }

RealInterval RealInterval::pi(long prec) {
    RealInterval r(prec);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
}

// enclosure of f(2*pi*k/n) for f in {cos, sin}; |f'| <= 1 so widening the
// endpoint values by the argument width is a correct (slightly loose) bound
RealInterval RealInterval::trig2pi(long k, long n, long prec, bool want_sin) {
    mpfr_t pd, pu, td, tu, a, b, c, d, w;
    mpfr_inits2(prec, pd, pu, td, tu, a, b, c, d, w, (mpfr_ptr) nullptr);
    mpfr_const_pi(pd, MPFR_RNDD);
    mpfr_const_pi(pu, MPFR_RNDU);
    // theta in [td, tu] encloses 2*pi*k/n
    if (k >= 0) {
        mpfr_mul_si(td, pd, 2 * k, MPFR_RNDD);
        mpfr_mul_si(tu, pu, 2 * k, MPFR_RNDU);
    } else {
        mpfr_mul_si(td, pu, 2 * k, MPFR_RNDD);
        mpfr_mul_si(tu, pd, 2 * k, MPFR_RNDU);
    }
    if (n >= 0) {
        mpfr_div_si(td, td, n, MPFR_RNDD);
        mpfr_div_si(tu, tu, n, MPFR_RNDU);
    } else {
        throw std::domain_error("trig2pi: n must be positive");
    }
    mpfr_sub(w, tu, td, MPFR_RNDU);
    if (want_sin) {
        mpfr_sin(a, td, MPFR_RNDD);
        mpfr_sin(b, td, MPFR_RNDU);
        mpfr_sin(c, tu, MPFR_RNDD);
        mpfr_sin(d, tu, MPFR_RNDU);
    } else {
        mpfr_cos(a, td, MPFR_RNDD);
        mpfr_cos(b, td, MPFR_RNDU);
        mpfr_cos(c, tu, MPFR_RNDD);
        mpfr_cos(d, tu, MPFR_RNDU);
    }
    RealInterval r(prec);
    mpfr_min(r.lo_, a, c, MPFR_RNDD);
    mpfr_max(r.hi_, b, d, MPFR_RNDU);
    mpfr_sub(r.lo_, r.lo_, w, MPFR_RNDD);
    mpfr_add(r.hi_, r.hi_, w, MPFR_RNDU);
    mpfr_clears(pd, pu, td, tu, a, b, c, d, w, (mpfr_ptr) nullptr);
    return r;
}

RealInterval RealInterval::cos2pi(long k, long n, long prec) { return trig2pi(k, n, prec, false); }
RealInterval RealInterval::sin2pi(long k, long n, long prec) { return trig2pi(k, n, prec, true); }

RealInterval RealInterval::operator+(const RealInterval& o) const {
    RealInterval r(std::max(prec_, o.prec_));
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

void RealInterval::add_assign(const RealInterval& o) {
    mpfr_add(lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(hi_, hi_, o.hi_, MPFR_RNDU);
}

RealInterval RealInterval::operator-(const RealInterval& o) const {
    RealInterval r(std::max(prec_, o.prec_));
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::operator-() const {
    RealInterval r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::operator*(const RealInterval& o) const {
    RealInterval r(std::max(prec_, o.prec_));
    mpfr_t c[8];
    for (auto& x : c) mpfr_init2(x, r.prec_);
    mpfr_mul(c[0], lo_, o.lo_, MPFR_RNDD);
    mpfr_mul(c[1], lo_, o.hi_, MPFR_RNDD);
    mpfr_mul(c[2], hi_, o.lo_, MPFR_RNDD);
    mpfr_mul(c[3], hi_, o.hi_, MPFR_RNDD);
    mpfr_mul(c[4], lo_, o.lo_, MPFR_RNDU);
    mpfr_mul(c[5], lo_, o.hi_, MPFR_RNDU);
    mpfr_mul(c[6], hi_, o.lo_, MPFR_RNDU);
    mpfr_mul(c[7], hi_, o.hi_, MPFR_RNDU);
    mpfr_min(r.lo_, c[0], c[1], MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, c[2], MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, c[3], MPFR_RNDD);
    mpfr_max(r.hi_, c[4], c[5], MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, c[6], MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, c[7], MPFR_RNDU);
    for (auto& x : c) mpfr_clear(x);
    return r;
}

RealInterval RealInterval::operator/(const RealInterval& o) const {
    if (o.contains_zero()) throw std::domain_error("RealInterval: division by interval containing 0");
    RealInterval inv(o.prec_);
    mpfr_ui_div(inv.lo_, 1, o.hi_, MPFR_RNDD);
    mpfr_ui_div(inv.hi_, 1, o.lo_, MPFR_RNDU);
    return *this * inv;
}

RealInterval RealInterval::sqrt() const {
    if (mpfr_sgn(lo_) < 0) throw std::domain_error("RealInterval: sqrt of interval below 0");
    RealInterval r(prec_);
    mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

int RealInterval::sign() const {
    if (mpfr_sgn(lo_) > 0) return 1;
    if (mpfr_sgn(hi_) < 0) return -1;
    return 0;
}

bool RealInterval::contains_zero() const { return sign() == 0; }

double RealInterval::midpoint() const {
    return (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN)) / 2.0;
}

double RealInterval::width() const {
    mpfr_t w;
    mpfr_init2(w, prec_);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
}

std::string RealInterval::str() const {
    std::ostringstream os;
    os << "[" << mpfr_get_d(lo_, MPFR_RNDD) << ", " << mpfr_get_d(hi_, MPFR_RNDU) << "]";
    return os.str();
}

}  // namespace hypershell

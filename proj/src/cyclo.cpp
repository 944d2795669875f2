#include "hypershell/cyclo.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>
#include <sstream>
#include <functional>

namespace hypershell {

long gcd_long(long a, long b) { return std::gcd(a, b); }
long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

long euler_phi(long n) {
    long r = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            r -= r / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) r -= r / n;
    return r;
}

std::vector<long> coprime_residues(long N) {
    std::vector<long> ks;
    for (long k = 1; k <= N; ++k)
        if (std::gcd(k, N) == 1) ks.push_back(k);
    return ks;  // {1} when N == 1
}

namespace {

long normalize_conductor(long N) {
    if (N <= 0) throw std::domain_error("conductor must be positive");
    if (N % 4 == 2) return N / 2;  // Q(zeta_{2m}) = Q(zeta_m) for odd m
    return N;
}

// integer polynomials, ascending coefficients
using ZPoly = std::vector<mpz_class>;

ZPoly zp_xn_minus_1(long n) {
    ZPoly p(n + 1, mpz_class(0));
    p[0] = -1;
    p[n] = 1;
    return p;
}

// exact division, both monic-leading integer polys dividing exactly
ZPoly zp_divexact(const ZPoly& num, const ZPoly& den) {
    ZPoly r = num;
    long dn = (long)num.size() - 1, dd = (long)den.size() - 1;
    ZPoly q(dn - dd + 1, mpz_class(0));
    for (long i = dn; i >= dd; --i) {
        if (r[i] == 0) continue;
        mpz_class c = r[i] / den[dd];
        q[i - dd] = c;
        for (long j = 0; j <= dd; ++j) r[i - dd + j] -= c * den[j];
    }
    for (auto& c : r)
        if (c != 0) throw std::logic_error("cyclotomic division not exact");
    return q;
}

const ZPoly& cyclotomic_poly(long n);

ZPoly compute_cyclotomic(long n) {
    if (n == 1) {
        return ZPoly{mpz_class(-1), mpz_class(1)};
    }
    ZPoly p = zp_xn_minus_1(n);
    for (long d = 1; d < n; ++d) {
        if (n % d == 0) p = zp_divexact(p, cyclotomic_poly(d));
    }
    return p;
}

std::map<long, ZPoly> g_cyc_cache;
std::shared_mutex g_cyc_mutex;

const ZPoly& cyclotomic_poly(long n) {
    {
        std::shared_lock lock(g_cyc_mutex);
        auto it = g_cyc_cache.find(n);
        if (it != g_cyc_cache.end()) return it->second;
    }
    ZPoly p = compute_cyclotomic(n);
    std::unique_lock lock(g_cyc_mutex);
    auto [it, ok] = g_cyc_cache.emplace(n, std::move(p));
    return it->second;
}

}  // namespace

/// Per-conductor reduction data: Phi_N, the reduced form of every zeta^j for
/// j in [0, N), and reduction rows for x^{phi..2phi-2}.
struct CycloContext {
    long N = 1;
    long phi = 1;
    ZPoly cyc;
    // red[i] = x^(phi+i) mod Phi_N, i in [0, phi-1), each of size phi
    std::vector<std::vector<mpq_class>> red;
    // zpow[j] = zeta^j reduced, j in [0, N)
    std::vector<std::vector<mpq_class>> zpow;

    explicit CycloContext(long n) : N(n) {
        phi = euler_phi(N);
        cyc = cyclotomic_poly(N);
        // x^phi = -sum_{i<phi} cyc[i] x^i (Phi_N is monic with integer coeffs)
        red.resize(std::max<long>(phi - 1, 0));
        std::vector<mpq_class> cur(phi, mpq_class(0));
        for (long i = 0; i < phi; ++i) cur[i] = mpq_class(-cyc[i]);
        if (phi >= 1 && !red.empty()) red[0] = cur;
        for (long i = 1; i < (long)red.size(); ++i) {
            // multiply cur by x and reduce
            std::vector<mpq_class> nxt(phi, mpq_class(0));
            mpq_class top = cur[phi - 1];
            for (long j = phi - 1; j >= 1; --j) nxt[j] = cur[j - 1];
            nxt[0] = 0;
            if (top != 0)
                for (long j = 0; j < phi; ++j) nxt[j] += top * red[0][j];
            red[i] = nxt;
            cur = std::move(nxt);
        }
        zpow.resize(N);
        for (long j = 0; j < std::min<long>(N, phi); ++j) {
            zpow[j].assign(phi, mpq_class(0));
            zpow[j][j] = 1;
        }
        for (long j = phi; j < N; ++j) {
            // zeta^j = zeta * zeta^{j-1}
            const auto& prev = zpow[j - 1];
            std::vector<mpq_class> nxt(phi, mpq_class(0));
            mpq_class top = prev[phi - 1];
            for (long i = phi - 1; i >= 1; --i) nxt[i] = prev[i - 1];
            if (top != 0 && phi >= 2)
                for (long i = 0; i < phi; ++i) nxt[i] += top * red[0][i];
            if (phi == 1) {
                // Q(zeta_1) or Q(zeta_2): zeta = cyc root: x = -cyc[0]
                nxt[0] = prev[0] * mpq_class(-cyc[0]);
            }
            zpow[j] = std::move(nxt);
        }
    }

    // reduce a polynomial of degree < 2*phi-1 in place to degree < phi
    std::vector<mpq_class> reduce(std::vector<mpq_class> p) const {
        if ((long)p.size() <= phi) {
            p.resize(phi, mpq_class(0));
            return p;
        }
        std::vector<mpq_class> out(p.begin(), p.begin() + phi);
        for (long i = phi; i < (long)p.size(); ++i) {
            if (p[i] == 0) continue;
            const auto& row = red[i - phi];
            for (long j = 0; j < phi; ++j) out[j] += p[i] * row[j];
        }
        return out;
    }
};

namespace {

std::map<long, std::shared_ptr<const CycloContext>> g_ctx_cache;
std::shared_mutex g_ctx_mutex;

std::shared_ptr<const CycloContext> context(long N) {
    {
        std::shared_lock lock(g_ctx_mutex);
        auto it = g_ctx_cache.find(N);
        if (it != g_ctx_cache.end()) return it->second;
    }
    auto ctx = std::make_shared<const CycloContext>(N);
    std::unique_lock lock(g_ctx_mutex);
    auto [it, ok] = g_ctx_cache.emplace(N, ctx);
    return it->second;
}

}  // namespace

CycNum::CycNum() : N_(1), a_(1, mpq_class(0)) {}
CycNum::CycNum(const mpq_class& q) : N_(1), a_(1, q) {}
CycNum::CycNum(long n) : N_(1), a_(1, mpq_class(n)) {}

CycNum CycNum::root_of_unity(long N, long k) {
    if (N < 1) throw std::domain_error("root_of_unity: N >= 1 required");
    k %= N;
    if (k < 0) k += N;
    if (N % 4 == 2) {
        // zeta_{2m} = -zeta_m^{(m+1)/2} for odd m, so zeta_{2m}^k = (-1)^k zeta_m^{k(m+1)/2}
        long m = N / 2;
        CycNum w = root_of_unity(m, (k % m) * ((m + 1) / 2) % m);
        return (k % 2 == 0) ? w : -w;
    }
    auto ctx = context(N);
    return CycNum(N, ctx->zpow[k]);
}

void CycNum::align(const CycNum& x, const CycNum& y, CycNum& xl, CycNum& yl) {
    long M = lcm_long(x.N_, y.N_);
    xl = x.lift(M);
    yl = y.lift(M);
}

CycNum CycNum::lift(long M) const {
    M = normalize_conductor(M);
    if (M == N_) return *this;
    if (M % N_ != 0) throw std::domain_error("lift: conductor does not divide target");
    auto ctx = context(M);
    long step = M / N_;
    std::vector<mpq_class> out(ctx->phi, mpq_class(0));
    for (long i = 0; i < (long)a_.size(); ++i) {
        if (a_[i] == 0) continue;
        const auto& z = ctx->zpow[(i * step) % M];
        for (long j = 0; j < ctx->phi; ++j) out[j] += a_[i] * z[j];
    }
    return CycNum(M, std::move(out));
}

CycNum CycNum::operator+(const CycNum& o) const {
    if (N_ == o.N_) {
        std::vector<mpq_class> out(a_);
        for (size_t i = 0; i < out.size(); ++i) out[i] += o.a_[i];
        return CycNum(N_, std::move(out));
    }
    CycNum x, y;
    align(*this, o, x, y);
    return x + y;
}

CycNum CycNum::operator-(const CycNum& o) const { return *this + (-o); }

CycNum CycNum::operator-() const {
    std::vector<mpq_class> out(a_);
    for (auto& c : out) c = -c;
    return CycNum(N_, std::move(out));
}

CycNum CycNum::operator*(const CycNum& o) const {
    if (N_ == o.N_) {
        auto ctx = context(N_);
        long phi = ctx->phi;
        std::vector<mpq_class> prod(2 * phi - 1, mpq_class(0));
        for (long i = 0; i < phi; ++i) {
            if (a_[i] == 0) continue;
            for (long j = 0; j < phi; ++j) {
                if (o.a_[j] == 0) continue;
                prod[i + j] += a_[i] * o.a_[j];
            }
        }
        return CycNum(N_, ctx->reduce(std::move(prod)));
    }
    CycNum x, y;
    align(*this, o, x, y);
    return x * y;
}

CycNum CycNum::operator/(const CycNum& o) const { return *this * o.inverse(); }

namespace {

// rational polynomials, ascending; helpers for the extended gcd used by inverse()
using QPoly = std::vector<mpq_class>;

long qp_deg(const QPoly& p) {
    for (long i = (long)p.size() - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

QPoly qp_scale(QPoly p, const mpq_class& c) {
    for (auto& x : p) x *= c;
    return p;
}

QPoly qp_sub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), mpq_class(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return a;
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
    long da = qp_deg(a), db = qp_deg(b);
    if (da < 0 || db < 0) return QPoly{mpq_class(0)};
    QPoly r(da + db + 1, mpq_class(0));
    for (long i = 0; i <= da; ++i) {
        if (a[i] == 0) continue;
        for (long j = 0; j <= db; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

// a = q*b + r
void qp_divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    long db = qp_deg(b);
    if (db < 0) throw std::domain_error("poly division by zero");
    r = a;
    long dr = qp_deg(r);
    q.assign(std::max<long>(dr - db + 1, 1), mpq_class(0));
    while (dr >= db) {
        mpq_class c = r[dr] / b[db];
        q[dr - db] += c;
        for (long j = 0; j <= db; ++j) r[dr - db + j] -= c * b[j];
        dr = qp_deg(r);
    }
}

}  // namespace

CycNum CycNum::inverse() const {
    if (is_zero()) throw std::domain_error("CycNum: inverse of zero");
    if (N_ == 1) {
        return CycNum(mpq_class(1) / a_[0]);
    }
    auto ctx = context(N_);
    // extended gcd of a(x) and Phi_N(x): s*a + t*Phi = gcd = const
    QPoly r0(ctx->cyc.size());
    for (size_t i = 0; i < ctx->cyc.size(); ++i) r0[i] = mpq_class(ctx->cyc[i]);
    QPoly r1 = a_;
    QPoly s0{mpq_class(0)}, s1{mpq_class(1)};  // coefficients on a(x)
    while (qp_deg(r1) > 0) {
        QPoly q, r;
        qp_divmod(r0, r1, q, r);
        QPoly s2 = qp_sub(s0, qp_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (qp_deg(r1) < 0) throw std::logic_error("CycNum: not invertible (shares factor with Phi_N)");
    mpq_class c = r1[0];
    QPoly inv = qp_scale(s1, mpq_class(1) / c);
    inv.resize(2 * ctx->phi - 1, mpq_class(0));
    return CycNum(N_, ctx->reduce(std::move(inv)));
}

CycNum CycNum::conj() const {
    if (N_ == 1) return *this;
    return galois(N_ - 1);
}

CycNum CycNum::galois(long k) const {
    if (N_ == 1) return *this;
    k %= N_;
    if (k < 0) k += N_;
    if (std::gcd(k, N_) != 1) throw std::domain_error("galois: k not coprime to conductor");
    auto ctx = context(N_);
    std::vector<mpq_class> out(ctx->phi, mpq_class(0));
    for (long i = 0; i < (long)a_.size(); ++i) {
        if (a_[i] == 0) continue;
        const auto& z = ctx->zpow[(i * k) % N_];
        for (long j = 0; j < ctx->phi; ++j) out[j] += a_[i] * z[j];
    }
    return CycNum(N_, std::move(out));
}

CycNum CycNum::pow(long e) const {
    if (e == 0) return one();
    if (e < 0) return inverse().pow(-e);
    CycNum base = *this, acc = one();
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

CycNum CycNum::real_part() const {
    return (*this + conj()) * CycNum(mpq_class(1, 2));
}

bool CycNum::is_zero() const {
    for (const auto& c : a_)
        if (c != 0) return false;
    return true;
}

bool CycNum::is_one() const {
    if (a_[0] != 1) return false;
    for (size_t i = 1; i < a_.size(); ++i)
        if (a_[i] != 0) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (size_t i = 1; i < a_.size(); ++i)
        if (a_[i] != 0) return false;
    return true;
}

mpq_class CycNum::rational_value() const {
    if (!is_rational()) throw std::domain_error("CycNum: not rational");
    return a_[0];
}

bool CycNum::is_real() const { return conj() == *this; }

bool CycNum::operator==(const CycNum& o) const {
    if (N_ == o.N_) return a_ == o.a_;
    CycNum x, y;
    align(*this, o, x, y);
    return x.a_ == y.a_;
}

bool CycNum::as_root_of_unity(long& k, long& M) const {
    // roots of unity in Q(zeta_N): {±zeta_N^j}; for odd N that set is mu_{2N}
    for (long j = 0; j < N_; ++j) {
        if (*this == root_of_unity(N_, j).lift(N_)) {
            long g = std::gcd(j, N_);
            k = j / g;
            M = N_ / g;
            return true;
        }
        if (*this == -root_of_unity(N_, j).lift(N_)) {
            // -zeta_N^j = zeta_{2N}^{N + 2j}
            long kk = N_ + 2 * j, MM = 2 * N_;
            long g = std::gcd(kk, MM);
            k = kk / g;
            M = MM / g;
            return true;
        }
    }
    return false;
}

namespace {
std::vector<long> prime_factors(long n) {
    std::vector<long> ps;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}
}  // namespace

CycNum CycNum::reduced() const {
    CycNum cur = *this;
    bool changed = true;
    while (changed && cur.N_ > 1) {
        changed = false;
        long n = cur.N_;
        for (long p : prime_factors(n)) {
            long M = normalize_conductor(n / p);
            if (M == n) continue;
            // cur is in Q(zeta_M) iff fixed by every k = 1 mod M coprime to n
            bool fixed = true;
            for (long kk = 1 + M; kk < n + M; kk += M) {
                long k = kk % n;
                if (k == 0 || std::gcd(k, n) != 1) continue;
                if (!(cur.galois(k) == cur)) { fixed = false; break; }
            }
            if (!fixed) continue;
            // re-express in Q(zeta_M): solve for coefficients against the
            // lifted basis of Q(zeta_M)
            auto ctxM = context(M);
            long phiM = ctxM->phi;
            auto ctxN = context(n);
            long phiN = ctxN->phi;
            // columns: basis vec of zeta_M^j at level n
            std::vector<std::vector<mpq_class>> cols(phiM);
            for (long j = 0; j < phiM; ++j) {
                CycNum bj = root_of_unity(M, j).lift(n);
                cols[j] = bj.a_;
            }
            // gaussian elimination on [cols | cur]
            std::vector<std::vector<mpq_class>> Mx(phiN, std::vector<mpq_class>(phiM + 1));
            for (long r = 0; r < phiN; ++r) {
                for (long j = 0; j < phiM; ++j) Mx[r][j] = cols[j][r];
                Mx[r][phiM] = cur.a_[r];
            }
            std::vector<long> pivot_col;
            long row = 0;
            for (long col = 0; col < phiM && row < phiN; ++col) {
                long pr = -1;
                for (long r = row; r < phiN; ++r)
                    if (Mx[r][col] != 0) { pr = r; break; }
                if (pr < 0) continue;
                std::swap(Mx[row], Mx[pr]);
                mpq_class inv = mpq_class(1) / Mx[row][col];
                for (long j = col; j <= phiM; ++j) Mx[row][j] *= inv;
                for (long r = 0; r < phiN; ++r) {
                    if (r == row || Mx[r][col] == 0) continue;
                    mpq_class f = Mx[r][col];
                    for (long j = col; j <= phiM; ++j) Mx[r][j] -= f * Mx[row][j];
                }
                pivot_col.push_back(col);
                ++row;
            }
            // read off solution
            std::vector<mpq_class> sol(phiM, mpq_class(0));
            for (long r = 0; r < (long)pivot_col.size(); ++r) sol[pivot_col[r]] = Mx[r][phiM];
            // consistency rows must be zero
            bool ok = true;
            for (long r = (long)pivot_col.size(); r < phiN; ++r)
                if (Mx[r][phiM] != 0) { ok = false; break; }
            if (!ok) continue;
            cur = CycNum(M, std::move(sol));
            changed = true;
            break;
        }
    }
    return cur;
}

CycNum CycNum::sqrt_integer(long n) {
    if (n < 0) throw std::domain_error("sqrt_integer: negative");
    if (n == 0) return zero();
    long sq = 1, m = n;
    for (long p = 2; p * p <= m; ++p) {
        while (m % (p * p) == 0) { m /= p * p; sq *= p; }
    }
    CycNum r{mpq_class(sq)};
    // m squarefree; sqrt(2) = zeta_8 + zeta_8^-1, sqrt(p) via the Gauss sum
    if (m % 2 == 0) {
        r = r * (root_of_unity(8, 1) + root_of_unity(8, 7));
        m /= 2;
    }
    for (long p = 3; p <= m; p += 2) {
        if (m % p != 0) continue;
        m /= p;
        std::vector<int> legendre(p, 0);
        for (long a = 1; a < p; ++a) legendre[(a * a) % p] = 1;
        CycNum g = zero();
        for (long a = 1; a < p; ++a) {
            CycNum z = root_of_unity(p, a);
            g = legendre[a] ? g + z : g - z;
        }
        if (p % 4 == 1) {
            r = r * g;
        } else {
            // g = i*sqrt(p); sqrt(p) = -i*g
            r = r * (-(root_of_unity(4, 1) * g));
        }
    }
    return r.reduced();
}

int CycNum::real_sign() const {
    if (is_zero()) return 0;
    if (!is_real()) throw std::domain_error("real_sign: input not real");
    if (is_rational()) return sgn(a_[0]);
    for (long prec = 64; prec <= 1L << 16; prec *= 2) {
        RealInterval v = real_interval(prec);
        int s = v.sign();
        if (s != 0) return s;
    }
    throw std::logic_error("real_sign: failed to certify nonzero value");
}

RealInterval CycNum::real_interval(long prec) const {
    RealInterval acc(prec);
    for (long i = 0; i < (long)a_.size(); ++i) {
        if (a_[i] == 0) continue;
        RealInterval c = RealInterval::cos2pi(i, N_, prec);
        acc.add_assign(c * RealInterval::from_rational(a_[i], prec));
    }
    return acc;
}

RealInterval CycNum::imag_interval(long prec) const {
    RealInterval acc(prec);
    for (long i = 0; i < (long)a_.size(); ++i) {
        if (a_[i] == 0) continue;
        RealInterval s = RealInterval::sin2pi(i, N_, prec);
        acc.add_assign(s * RealInterval::from_rational(a_[i], prec));
    }
    return acc;
}

double CycNum::approx_real() const { return real_interval(64).midpoint(); }
double CycNum::approx_imag() const { return imag_interval(64).midpoint(); }

std::string CycNum::str() const {
    std::ostringstream os;
    bool first = true;
    for (long i = 0; i < (long)a_.size(); ++i) {
        if (a_[i] == 0) continue;
        if (!first) os << " + ";
        os << a_[i].get_str();
        if (i > 0) os << "*z" << N_ << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

void CycNum::key_append(std::string& out) const {
    out += std::to_string(N_);
    out += ':';
    for (const auto& c : a_) {
        out += c.get_str(16);
        out += ',';
    }
}

std::size_t CycNum::hash() const {
    std::string k;
    key_append(k);
    return std::hash<std::string>{}(k);
}

std::vector<mpq_class> min_poly(const CycNum& x) {
    CycNum xr = x.reduced();
    long N = xr.conductor();
    std::vector<CycNum> orbit;
    for (long k : coprime_residues(N)) {
        CycNum y = (N == 1) ? xr : xr.galois(k);
        bool seen = false;
        for (const auto& z : orbit)
            if (z == y) { seen = true; break; }
        if (!seen) orbit.push_back(y);
    }
    // product of (X - y) with CycNum coefficients
    std::vector<CycNum> poly{CycNum::one()};
    for (const auto& y : orbit) {
        std::vector<CycNum> nxt(poly.size() + 1, CycNum::zero());
        for (size_t i = 0; i < poly.size(); ++i) {
            nxt[i + 1] = nxt[i + 1] + poly[i];
            nxt[i] = nxt[i] - poly[i] * y;
        }
        poly = std::move(nxt);
    }
    std::vector<mpq_class> out(poly.size());
    for (size_t i = 0; i < poly.size(); ++i) {
        if (!poly[i].is_rational())
            throw std::logic_error("min_poly: non-rational coefficient");
        out[i] = poly[i].rational_value();
    }
    return out;
}

}  // namespace hypershell

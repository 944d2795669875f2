#include "hypershell/families.hpp"

#include <stdexcept>

namespace hypershell {

std::string family_name(Family f) {
    switch (f) {
        case Family::Sporadic: return "sporadic";
        case Family::Thompson: return "thompson";
        case Family::Mostow: return "mostow";
    }
    return "?";
}

Mat3 TriangleGroup::shift() const { return symmetric() ? R1 * *J : Qmat(); }

const Mat3& TriangleGroup::generator(int i) const {
    switch (i) {
        case 1: return R1;
        case 2: return R2;
        case 3: return R3;
        case 4:
            if (!J) throw std::domain_error("group has no J generator");
            return *J;
    }
    throw std::domain_error("bad generator index");
}

Mat3 TriangleGroup::generator_inverse(int i) const { return generator(i).inverse(); }

Mat3 TriangleGroup::word(const std::string& w) const { return evaluate(parse_word(w), *this); }

namespace {

TriangleGroup build(GroupSpec spec, const CycNum& rho, const CycNum& sigma, const CycNum& tau,
                    bool symmetric) {
    long p = spec.p;
    long N = lcm_long(3 * p, lcm_long(rho.conductor(), lcm_long(sigma.conductor(), tau.conductor())));
    if (N % 4 == 2) N /= 2;
    CycNum u = CycNum::root_of_unity(3 * p, 1).lift(N);
    CycNum ub = u.conj();
    CycNum rhoL = rho.lift(N), sigmaL = sigma.lift(N), tauL = tau.lift(N);
    CycNum alpha = CycNum(2) - u.pow(3) - ub.pow(3);
    CycNum cb = ub * ub - u;  // (conj u)^2 - u
    CycNum b1 = cb * rhoL, b2 = cb * sigmaL, b3 = cb * tauL;
    Mat3 Hm = Mat3::zero();
    Hm.at(0, 0) = alpha; Hm.at(0, 1) = b1;        Hm.at(0, 2) = b3.conj();
    Hm.at(1, 0) = b1.conj(); Hm.at(1, 1) = alpha; Hm.at(1, 2) = b2;
    Hm.at(2, 0) = b3; Hm.at(2, 1) = b2.conj();    Hm.at(2, 2) = alpha;
    HermForm H(Hm);
    int ds = H.det().real_sign();
    if (ds >= 0) throw NotHyperbolic(ds);

    Mat3 R1 = Mat3::zero();
    R1.at(0, 0) = u * u; R1.at(0, 1) = rhoL; R1.at(0, 2) = -(u * tauL.conj());
    R1.at(1, 1) = ub;
    R1.at(2, 2) = ub;

    TriangleGroup G{std::move(spec), N, R1, Mat3::identity(), Mat3::identity(), std::nullopt, H, u};
    if (symmetric) {
        Mat3 Jm = Mat3::zero();
        Jm.at(0, 2) = CycNum::one();
        Jm.at(1, 0) = CycNum::one();
        Jm.at(2, 1) = CycNum::one();
        Mat3 Ji = Jm.inverse();
        G.R2 = Jm * G.R1 * Ji;
        G.R3 = Jm * G.R2 * Ji;
        G.J = Jm;
    } else {
        Mat3 R2 = Mat3::zero();
        R2.at(0, 0) = ub;
        R2.at(1, 0) = -(u * rhoL.conj()); R2.at(1, 1) = u * u; R2.at(1, 2) = sigmaL;
        R2.at(2, 2) = ub;
        Mat3 R3 = Mat3::zero();
        R3.at(0, 0) = ub;
        R3.at(1, 1) = ub;
        R3.at(2, 0) = tauL; R3.at(2, 1) = -(u * sigmaL.conj()); R3.at(2, 2) = u * u;
        G.R2 = R2;
        G.R3 = R3;
    }
    return G;
}

}  // namespace

TriangleGroup sporadic_group(long p, const CycNum& tau, const std::string& label) {
    GroupSpec spec{Family::Sporadic, p, {tau}, label, std::nullopt};
    if (label.empty()) spec.label = "S(" + std::to_string(p) + ",tau)";
    return build(std::move(spec), tau, tau, tau, true);
}

TriangleGroup thompson_group(long p, const std::array<CycNum, 3>& T, const std::string& label) {
    GroupSpec spec{Family::Thompson, p, {T[0], T[1], T[2]}, label, std::nullopt};
    if (label.empty()) spec.label = "T(" + std::to_string(p) + ",T)";
    return build(std::move(spec), T[0], T[1], T[2], false);
}

CycNum mostow_tau(long p, const mpq_class& t) {
    mpq_class e = mpq_class(3, 4) + mpq_class(1, 6 * p) - t / 6;
    // reduce mod 1
    mpz_class num = e.get_num(), den = e.get_den();
    mpz_class r = num % den;
    if (r < 0) r += den;
    long k = (long)r.get_si();
    long M = (long)den.get_si();
    return CycNum::root_of_unity(M, k);
}

TriangleGroup mostow_group(long p, const mpq_class& t) {
    CycNum tau = mostow_tau(p, t);
    std::string label = "Gamma(" + std::to_string(p) + "," + t.get_str() + ")";
    GroupSpec spec{Family::Mostow, p, {tau}, label, t};
    return build(std::move(spec), tau, tau, tau, true);
}

Vec3 TriangleGroup::p0() const {
    Mat3 S = shift();
    auto ord = proj_order(S, 2000);
    if (!ord) throw std::runtime_error("p0: shift element order exceeds cap");
    Mat3 Sm = S.pow(*ord);
    CycNum lam = *Sm.scalar_value();
    long k, M;
    if (!lam.as_root_of_unity(k, M)) throw std::logic_error("p0: scalar power is not a root of unity");
    // eigenvalues are roots of z^ord = lam, i.e. zeta_{ord*M}^{k'} with
    // k' = k/ord adjusted; enumerate candidates in the enlarged field
    long L = lcm_long(lcm_long(N, *ord * M), 3L);
    CycNum tr = S.trace();
    for (long j = 0; j < *ord * M; ++j) {
        // candidate c = zeta_{ord*M}^j with c^ord == lam
        CycNum c = CycNum::root_of_unity(*ord * M, j);
        if (!(c.pow(*ord) == lam)) continue;
        // chi(c) == 0?
        CycNum cl = c.lift(L);
        CycNum chi = cl.pow(3) - tr.lift(L) * cl.pow(2) + tr.conj().lift(L) * cl - CycNum::one();
        if (!chi.is_zero()) continue;
        Mat3 SL;
        for (int i = 0; i < 9; ++i) SL.e[i] = S.e[i].lift(L);
        Vec3 v = eigenvector(SL, cl);
        Mat3 HL;
        for (int i = 0; i < 9; ++i) HL.e[i] = H.mat().e[i].lift(L);
        HermForm HF(HL);
        if (HF.norm_sign(v) < 0) return v;
    }
    throw std::logic_error("p0: no negative eigenvector found");
}

TriangleParams triangle_params(const Mat3& M1, const Mat3& M2, const Mat3& M3,
                               const HermForm& H, const CycNum& u) {
    Vec3 n1 = reflection_polar(M1, H);
    Vec3 n2 = reflection_polar(M2, H);
    Vec3 n3 = reflection_polar(M3, H);
    CycNum c = u * u - u.conj();
    CycNum c2 = c.norm2();
    CycNum q11 = H.inner(n1, n1), q22 = H.inner(n2, n2), q33 = H.inner(n3, n3);
    CycNum i21 = H.inner(n2, n1), i32 = H.inner(n3, n2), i13 = H.inner(n1, n3);
    TriangleParams P;
    P.rho2 = c2 * i21.norm2() / (q22 * q11);
    P.sigma2 = c2 * i32.norm2() / (q33 * q22);
    P.tau2 = c2 * i13.norm2() / (q11 * q33);
    P.rst = c.pow(3) * i21 * i32 * i13 / (q11 * q22 * q33);
    return P;
}

TriangleParams triangle_params(const TriangleGroup& G) {
    return triangle_params(G.R1, G.R2, G.R3, G.H, G.u);
}

std::array<mpq_class, 5> dm_exponents(long p, const mpq_class& t) {
    mpq_class a = mpq_class(1, 2) - mpq_class(1, p);
    mpq_class b = mpq_class(1, 4) + mpq_class(3, 2 * p);
    return {a, a, a, b - t / 2, b + t / 2};
}

bool on_mostow_curve(const CycNum& tau) {
    if (!(tau.norm2() == CycNum::one())) return false;
    long k, M;
    return (-tau).as_root_of_unity(k, M);
}

bool on_sauter_curve(const CycNum& tau) {
    CycNum t = tau.reduced();
    long L = lcm_long(t.conductor(), 36);
    for (long j = 0; j < L; ++j) {
        CycNum eta = CycNum::root_of_unity(L, j);
        CycNum cand = eta * eta + eta.conj();
        if (cand == t) return true;
        if (-cand == t) return true;  // eta at odd half-turn offset
    }
    return false;
}

}  // namespace hypershell

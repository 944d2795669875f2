#include "hypershell/braid.hpp"

#include <stdexcept>

namespace hypershell {

std::optional<long> braid_length(const Mat3& A, const Mat3& B, long cap) {
    Mat3 x = Mat3::identity(), y = Mat3::identity();
    for (long n = 1; n <= cap; ++n) {
        x = x * ((n % 2 == 1) ? A : B);
        y = y * ((n % 2 == 1) ? B : A);
        if (n >= 2 && proj_equal(x, y)) return n;
    }
    return std::nullopt;
}

ClosedFormBraid braid_length_closed_form(const Vec3& a, const Vec3& b, const HermForm& H,
                                         const CycNum& u, long cap) {
    CycNum u3 = u.pow(3);
    CycNum f = (u3 - CycNum::one()).norm2();
    CycNum val = f * H.inner(a, b).norm2() / (H.norm(a) * H.norm(b));
    // 4cos^2(theta) = val, i.e. 2cos(2theta) = val - 2
    CycNum c = val - CycNum(2);
    int hi = (c - CycNum(2)).real_sign();
    if (hi > 0) return {ClosedFormBraid::Loxodromic};
    if (hi == 0) return {ClosedFormBraid::Parabolic};
    if ((c + CycNum(2)).real_sign() < 0)
        throw std::logic_error("closed-form braid: 4cos^2 below 0");
    // find reduced j/m with c = 2cos(2pi j/m); the conductor of the real
    // subfield Q(c) divides N, so candidate m divide lcm(2N, 12)
    long L = lcm_long(2 * c.conductor(), 12);
    for (long m = 1; m <= L; ++m) {
        if (L % m != 0) continue;
        for (long j = 1; 2 * j <= m; ++j) {
            if (gcd_long(j, m) != 1) continue;
            CycNum cand = CycNum::root_of_unity(m, j) + CycNum::root_of_unity(m, -j);
            if (cand == c) {
                // 2theta = 2pi j/m => theta = pi j/m
                ClosedFormBraid out{ClosedFormBraid::Elliptic, j, m};
                if (out.theta_den > cap) return {ClosedFormBraid::NotRational};
                return out;
            }
        }
    }
    return {ClosedFormBraid::NotRational};
}

std::string GroupType::str() const {
    auto f = [](const std::optional<long>& v) { return v ? std::to_string(*v) : std::string("oo"); };
    return f(br[0]) + "," + f(br[1]) + "," + f(br[2]) + ";" + f(br[3]) + "," + f(br[4]) + "," + f(br[5]) +
           ";" + f(order_p);
}

GroupType group_type(const TriangleGroup& G, long cap) {
    GroupType t;
    const Mat3 c232 = G.word("23~2");
    const Mat3 c121 = G.word("12~1");
    const Mat3 c323 = G.word("~323");
    std::array<std::pair<Mat3, Mat3>, 6> pairs = {{
        {G.R2, G.R3}, {G.R3, G.R1}, {G.R1, G.R2},
        {G.R1, c232}, {G.R3, c121}, {G.R1, c323},
    }};
    for (int i = 0; i < 6; ++i) {
        // closed form first: cheap and decides the infinite cases without
        // running the alternating products to the cap
        ClosedFormBraid cf = braid_length_closed_form(
            reflection_polar(pairs[i].first, G.H), reflection_polar(pairs[i].second, G.H), G.H, G.u, cap);
        if (auto q = cf.braid()) {
            t.br[i] = braid_length(pairs[i].first, pairs[i].second, std::min(cap, *q + 2));
            if (t.br[i] != q)
                throw std::logic_error("group_type: closed-form and brute-force braid disagree");
        } else if (cf.status == ClosedFormBraid::Elliptic) {
            // theta = k pi/q with k > 1: fall back to brute force
            t.br[i] = braid_length(pairs[i].first, pairs[i].second, cap);
        } else {
            t.br[i] = std::nullopt;
        }
    }
    auto op = proj_order(G.shift(), cap);
    t.order_p = op;
    return t;
}

CentralElement central_element(const Mat3& A, const Mat3& B, long q, const HermForm& H) {
    auto br = braid_length(A, B, 4 * q + 4);
    if (!br || *br != q) throw std::domain_error("central_element: braid length mismatch");
    Mat3 ab = A * B;
    Mat3 C = (q % 2 == 0) ? ab.pow(q / 2) : ab.pow(q);
    return {C, classify(C, H)};
}

}  // namespace hypershell

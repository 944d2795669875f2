#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hypershell/linalg.hpp"
#include "hypershell/words.hpp"

namespace hypershell {

enum class Family { Sporadic, Thompson, Mostow };

std::string family_name(Family f);

struct GroupSpec {
    Family family;
    long p = 3;
    // Sporadic/Mostow: tau in params[0]; Thompson: (rho, sigma, tau)
    std::vector<CycNum> params;
    std::string label;          // e.g. "S(4,sigma1)", "T(5,S2)", "Gamma(6,1/6)"
    std::optional<mpq_class> mostow_t;
};

/// Construction failed because the Hermitian form does not have signature (2,1).
struct NotHyperbolic : std::runtime_error {
    int sign_found;
    explicit NotHyperbolic(int s)
        : std::runtime_error("Hermitian form is not of signature (2,1); det sign " + std::to_string(s)),
          sign_found(s) {}
};

struct TriangleGroup {
    GroupSpec spec;
    long N = 3;  // field conductor
    Mat3 R1, R2, R3;
    std::optional<Mat3> J;
    HermForm H;
    CycNum u;  // e^{2 pi i / 3p}

    bool symmetric() const { return J.has_value(); }
    /// invariance element: P = R1 J for symmetric groups, Q otherwise
    Mat3 shift() const;
    Mat3 Qmat() const { return R1 * R2 * R3; }
    const Mat3& generator(int i) const;
    Mat3 generator_inverse(int i) const;
    Mat3 word(const std::string& w) const;

    /// isolated fixed point of the shift element (negative eigenvector);
    /// may live at a larger conductor than N
    Vec3 p0() const;
};

TriangleGroup sporadic_group(long p, const CycNum& tau, const std::string& label = "");
TriangleGroup thompson_group(long p, const std::array<CycNum, 3>& T, const std::string& label = "");
TriangleGroup mostow_group(long p, const mpq_class& t);

/// Mostow tau as the exact root of unity e^{2 pi i (3/4 + 1/(6p) - t/6)}
CycNum mostow_tau(long p, const mpq_class& t);

/// conjugacy invariants of a triple of same-angle complex reflections
struct TriangleParams {
    CycNum rho2, sigma2, tau2;  // |rho|^2, |sigma|^2, |tau|^2
    CycNum rst;                 // rho*sigma*tau
    bool operator==(const TriangleParams&) const = default;
};

TriangleParams triangle_params(const Mat3& M1, const Mat3& M2, const Mat3& M3,
                               const HermForm& H, const CycNum& u);
TriangleParams triangle_params(const TriangleGroup& G);

/// Deligne-Mostow exponents of Gamma(p,t); the five entries sum to 2
std::array<mpq_class, 5> dm_exponents(long p, const mpq_class& t);

/// tau = -e^{i phi/3} for a rational multiple phi of pi
bool on_mostow_curve(const CycNum& tau);
/// tau = e^{i phi/6} 2cos(phi/2), i.e. tau = eta^2 + conj(eta) for a root of unity eta
bool on_sauter_curve(const CycNum& tau);

}  // namespace hypershell

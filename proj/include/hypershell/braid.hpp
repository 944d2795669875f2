#pragma once

#include <optional>
#include <variant>

#include "hypershell/families.hpp"

namespace hypershell {

inline constexpr long kDefaultBraidCap = 2000;

/// least n with the alternating n-letter products of A and B projectively
/// equal; nullopt when the cap is exceeded
std::optional<long> braid_length(const Mat3& A, const Mat3& B, long cap = kDefaultBraidCap);

/// Closed-form braid data for two same-angle reflections with polar vectors
/// a, b: computes 4cos^2(theta) = |u^3-1|^2 |<a,b>|^2 / (<a,a><b,b>) exactly
/// and matches theta against rational multiples of pi.
struct ClosedFormBraid {
    enum Status { Elliptic, Parabolic, Loxodromic, NotRational } status;
    long theta_num = 0, theta_den = 1;  // theta = pi * num/den, reduced; Elliptic only
    /// braid length q when theta = pi/q (Prop: br(A,B) = q)
    std::optional<long> braid() const {
        if (status == Elliptic && theta_num == 1) return theta_den;
        return std::nullopt;
    }
};

ClosedFormBraid braid_length_closed_form(const Vec3& a, const Vec3& b, const HermForm& H,
                                         const CycNum& u, long cap = kDefaultBraidCap);

struct GroupType {
    // br(2,3), br(3,1), br(1,2); br(1,23~2), br(3,12~1), br(1,~323)
    std::array<std::optional<long>, 6> br;
    std::optional<long> order_p;  // projective order of P (symmetric) or Q
    std::string str() const;      // "a,b,c;d,e,f;g" with "oo" for infinite
};

GroupType group_type(const TriangleGroup& G, long cap = kDefaultBraidCap);

/// (AB)^q for odd q, (AB)^{q/2} for even q, with its classification;
/// requires br(A,B) = q
struct CentralElement {
    Mat3 mat;
    IsometryType type;
};
CentralElement central_element(const Mat3& A, const Mat3& B, long q, const HermForm& H);

}  // namespace hypershell

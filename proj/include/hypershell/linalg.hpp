#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>

#include "hypershell/cyclo.hpp"

namespace hypershell {

struct Vec3 {
    std::array<CycNum, 3> c;
    const CycNum& operator[](int i) const { return c[i]; }
    CycNum& operator[](int i) { return c[i]; }
    bool is_zero() const;
    Vec3 operator*(const CycNum& s) const;
    Vec3 operator+(const Vec3&) const;
    Vec3 operator-(const Vec3&) const;
    Vec3 conj() const;
    /// scale so the first nonzero coordinate is 1 (projective representative)
    Vec3 proj_normalized() const;
    bool proj_equal(const Vec3&) const;
    std::string key() const;
};

struct Mat3 {
    std::array<CycNum, 9> e;  // row-major
    static Mat3 identity();
    static Mat3 zero();
    const CycNum& at(int i, int j) const { return e[3 * i + j]; }
    CycNum& at(int i, int j) { return e[3 * i + j]; }

    Mat3 operator*(const Mat3&) const;
    Vec3 operator*(const Vec3&) const;
    Mat3 operator*(const CycNum& s) const;
    Mat3 operator+(const Mat3&) const;
    Mat3 operator-(const Mat3&) const;
    Mat3 conj_transpose() const;
    Mat3 transpose() const;
    Mat3 apply_galois(long k) const;  // entrywise
    CycNum det() const;
    CycNum trace() const;
    Mat3 adjugate() const;
    Mat3 inverse() const;  // throws if singular
    Mat3 pow(long k) const;

    bool operator==(const Mat3&) const;
    /// is this a scalar matrix? returns the scalar when so
    std::optional<CycNum> scalar_value() const;
    /// first nonzero entry scaled to 1; canonical representative mod scalars
    Mat3 proj_normalized() const;
    std::string key() const;  // canonical bytes of proj_normalized form
};

/// exact projective equality: A B^{-1} scalar (equivalently proportional)
bool proj_equal(const Mat3& A, const Mat3& B);

/// least k <= cap with A^k scalar; nullopt when the cap is exceeded
std::optional<long> proj_order(const Mat3& A, long cap);
/// least k <= cap with A^k the identity matrix
std::optional<long> matrix_order(const Mat3& A, long cap);

class HermForm {
public:
    explicit HermForm(Mat3 H);  // checks conj_transpose(H) == H
    const Mat3& mat() const { return H_; }
    /// <v, w> = w^* H v  (linear in v, conjugate linear in w)
    CycNum inner(const Vec3& v, const Vec3& w) const;
    CycNum norm(const Vec3& v) const { return inner(v, v); }
    int norm_sign(const Vec3& v) const;
    /// signature (n+, n0, n-) via exactly signed characteristic coefficients
    std::array<int, 3> signature() const;
    CycNum det() const { return H_.det(); }
    HermForm apply_galois(long k) const;

private:
    Mat3 H_;
    mutable std::optional<std::array<int, 3>> sig_;
};

/// intersection point of the two lines polar to v and w:
/// H^{-1} conj(v x w); orthogonal to both v and w
Vec3 box(const Vec3& v, const Vec3& w, const HermForm& H);

enum class IsometryClass {
    Scalar,
    RegularElliptic,
    ComplexReflectionLine,
    ComplexReflectionPoint,
    Parabolic,
    Loxodromic,
};

struct IsometryType {
    IsometryClass cls;
    /// reflection rotation angle as a reduced fraction of a full turn
    /// (angle = 2*pi*num/den, normalized to (-1/2, 1/2]); only for reflections
    /// with root-of-unity eigenvalue ratio
    std::optional<std::pair<long, long>> turn;
    std::string describe() const;
};

/// exact classification of an H-isometry (trace discriminant + eigenstructure)
IsometryType classify(const Mat3& A, const HermForm& H);

/// polar vector of a complex reflection: eigenvector of the simple eigenvalue
Vec3 reflection_polar(const Mat3& A, const HermForm& H);

/// eigenvector for a known eigenvalue (nonzero column of adj(A - lambda I))
Vec3 eigenvector(const Mat3& A, const CycNum& lambda);

/// exact rank via Gaussian elimination
int rank(const Mat3& A);

}  // namespace hypershell

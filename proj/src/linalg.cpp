#include "hypershell/linalg.hpp"

#include <stdexcept>

namespace hypershell {

bool Vec3::is_zero() const { return c[0].is_zero() && c[1].is_zero() && c[2].is_zero(); }

Vec3 Vec3::operator*(const CycNum& s) const { return {c[0] * s, c[1] * s, c[2] * s}; }
Vec3 Vec3::operator+(const Vec3& o) const { return {c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2]}; }
Vec3 Vec3::operator-(const Vec3& o) const { return {c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2]}; }
Vec3 Vec3::conj() const { return {c[0].conj(), c[1].conj(), c[2].conj()}; }

Vec3 Vec3::proj_normalized() const {
    for (int i = 0; i < 3; ++i) {
        if (!c[i].is_zero()) {
            CycNum inv = c[i].inverse();
            return {c[0] * inv, c[1] * inv, c[2] * inv};
        }
    }
    throw std::domain_error("proj_normalized: zero vector");
}

bool Vec3::proj_equal(const Vec3& o) const {
    // cross-multiplication, no inverses
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (!(c[i] * o.c[j] == c[j] * o.c[i])) return false;
    return true;
}

std::string Vec3::key() const {
    Vec3 n = proj_normalized();
    std::string k;
    for (int i = 0; i < 3; ++i) n.c[i].key_append(k);
    return k;
}

Mat3 Mat3::identity() {
    Mat3 m = zero();
    for (int i = 0; i < 3; ++i) m.at(i, i) = CycNum::one();
    return m;
}

Mat3 Mat3::zero() {
    Mat3 m;
    for (auto& x : m.e) x = CycNum::zero();
    return m;
}

Mat3 Mat3::operator*(const Mat3& o) const {
    Mat3 r = zero();
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) {
            if (at(i, k).is_zero()) continue;
            for (int j = 0; j < 3; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) += at(i, k) * o.at(k, j);
            }
        }
    return r;
}

Vec3 Mat3::operator*(const Vec3& v) const {
    Vec3 r{CycNum::zero(), CycNum::zero(), CycNum::zero()};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (at(i, j).is_zero() || v.c[j].is_zero()) continue;
            r.c[i] += at(i, j) * v.c[j];
        }
    return r;
}

Mat3 Mat3::operator*(const CycNum& s) const {
    Mat3 r;
    for (int i = 0; i < 9; ++i) r.e[i] = e[i] * s;
    return r;
}

Mat3 Mat3::operator+(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 9; ++i) r.e[i] = e[i] + o.e[i];
    return r;
}

Mat3 Mat3::operator-(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 9; ++i) r.e[i] = e[i] - o.e[i];
    return r;
}

Mat3 Mat3::conj_transpose() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.at(i, j) = at(j, i).conj();
    return r;
}

Mat3 Mat3::transpose() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.at(i, j) = at(j, i);
    return r;
}

Mat3 Mat3::apply_galois(long k) const {
    Mat3 r;
    for (int i = 0; i < 9; ++i) r.e[i] = e[i].galois(k);
    return r;
}

CycNum Mat3::det() const {
    return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1))
         - at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0))
         + at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
}

CycNum Mat3::trace() const { return at(0, 0) + at(1, 1) + at(2, 2); }

Mat3 Mat3::adjugate() const {
    Mat3 r;
    auto cof = [&](int i, int j) {
        int i1 = (i + 1) % 3, i2 = (i + 2) % 3;
        int j1 = (j + 1) % 3, j2 = (j + 2) % 3;
        return at(i1, j1) * at(i2, j2) - at(i1, j2) * at(i2, j1);
    };
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.at(i, j) = cof(j, i);
    return r;
}

Mat3 Mat3::inverse() const {
    CycNum d = det();
    if (d.is_zero()) throw std::domain_error("Mat3: singular");
    return adjugate() * d.inverse();
}

Mat3 Mat3::pow(long k) const {
    if (k == 0) return identity();
    if (k < 0) return inverse().pow(-k);
    Mat3 base = *this, acc = identity();
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool Mat3::operator==(const Mat3& o) const {
    for (int i = 0; i < 9; ++i)
        if (!(e[i] == o.e[i])) return false;
    return true;
}

std::optional<CycNum> Mat3::scalar_value() const {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j && !at(i, j).is_zero()) return std::nullopt;
    if (!(at(0, 0) == at(1, 1)) || !(at(1, 1) == at(2, 2))) return std::nullopt;
    return at(0, 0);
}

Mat3 Mat3::proj_normalized() const {
    for (int i = 0; i < 9; ++i) {
        if (!e[i].is_zero()) {
            CycNum inv = e[i].inverse();
            return *this * inv;
        }
    }
    throw std::domain_error("proj_normalized: zero matrix");
}

std::string Mat3::key() const {
    Mat3 n = proj_normalized();
    std::string k;
    for (int i = 0; i < 9; ++i) n.e[i].key_append(k);
    return k;
}

bool proj_equal(const Mat3& A, const Mat3& B) {
    // find first nonzero of B, cross-multiply
    int m = -1;
    for (int i = 0; i < 9; ++i)
        if (!B.e[i].is_zero()) { m = i; break; }
    if (m < 0) throw std::domain_error("proj_equal: zero matrix");
    if (A.e[m].is_zero()) return false;
    for (int i = 0; i < 9; ++i)
        if (!(A.e[i] * B.e[m] == B.e[i] * A.e[m])) return false;
    return true;
}

std::optional<long> proj_order(const Mat3& A, long cap) {
    Mat3 M = A;
    for (long k = 1; k <= cap; ++k) {
        if (M.scalar_value()) return k;
        M = M * A;
    }
    return std::nullopt;
}

std::optional<long> matrix_order(const Mat3& A, long cap) {
    Mat3 M = A;
    for (long k = 1; k <= cap; ++k) {
        auto s = M.scalar_value();
        if (s && s->is_one()) return k;
        M = M * A;
    }
    return std::nullopt;
}

HermForm::HermForm(Mat3 H) : H_(std::move(H)) {
    if (!(H_.conj_transpose() == H_))
        throw std::domain_error("HermForm: matrix is not Hermitian");
}

CycNum HermForm::inner(const Vec3& v, const Vec3& w) const {
    CycNum acc;
    for (int i = 0; i < 3; ++i) {
        if (w.c[i].is_zero()) continue;
        CycNum wi = w.c[i].conj();
        for (int j = 0; j < 3; ++j) {
            if (H_.at(i, j).is_zero() || v.c[j].is_zero()) continue;
            acc += wi * H_.at(i, j) * v.c[j];
        }
    }
    return acc;
}

int HermForm::norm_sign(const Vec3& v) const { return norm(v).real_sign(); }

std::array<int, 3> HermForm::signature() const {
    if (sig_) return *sig_;
    // char poly x^3 - t x^2 + m x - d, all roots real
    CycNum t = H_.trace();
    CycNum d = H_.det();
    CycNum m = H_.at(0, 0) * H_.at(1, 1) - H_.at(0, 1) * H_.at(1, 0)
             + H_.at(0, 0) * H_.at(2, 2) - H_.at(0, 2) * H_.at(2, 0)
             + H_.at(1, 1) * H_.at(2, 2) - H_.at(1, 2) * H_.at(2, 1);
    // ascending coefficients of char poly
    std::array<CycNum, 4> c = {-d, m, -t, CycNum::one()};
    // strip zero roots
    int zero = 0;
    while (zero < 3 && c[zero].is_zero()) ++zero;
    // Descartes on exact signs (exact for polynomials with all-real roots)
    int signs[4];
    for (int i = zero; i <= 3; ++i) signs[i] = c[i].real_sign();
    int pos = 0;
    int prev = 0;
    for (int i = zero; i <= 3; ++i) {
        if (signs[i] == 0) continue;
        if (prev != 0 && signs[i] != prev) ++pos;
        prev = signs[i];
    }
    std::array<int, 3> out = {pos, zero, 3 - zero - pos};
    sig_ = out;
    return out;
}

HermForm HermForm::apply_galois(long k) const { return HermForm(H_.apply_galois(k)); }

Vec3 box(const Vec3& v, const Vec3& w, const HermForm& H) {
    Vec3 cr{v.c[1] * w.c[2] - v.c[2] * w.c[1],
            v.c[2] * w.c[0] - v.c[0] * w.c[2],
            v.c[0] * w.c[1] - v.c[1] * w.c[0]};
    if (cr.is_zero()) throw std::domain_error("box: proportional vectors");
    return H.mat().inverse() * cr.conj();
}

int rank(const Mat3& A) {
    std::array<std::array<CycNum, 3>, 3> m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = A.at(i, j);
    int r = 0;
    for (int col = 0; col < 3 && r < 3; ++col) {
        int p = -1;
        for (int i = r; i < 3; ++i)
            if (!m[i][col].is_zero()) { p = i; break; }
        if (p < 0) continue;
        std::swap(m[r], m[p]);
        CycNum inv = m[r][col].inverse();
        for (int j = col; j < 3; ++j) m[r][j] = m[r][j] * inv;
        for (int i = 0; i < 3; ++i) {
            if (i == r || m[i][col].is_zero()) continue;
            CycNum f = m[i][col];
            for (int j = col; j < 3; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        ++r;
    }
    return r;
}

Vec3 eigenvector(const Mat3& A, const CycNum& lambda) {
    Mat3 M = A;
    for (int i = 0; i < 3; ++i) M.at(i, i) = M.at(i, i) - lambda;
    Mat3 adj = M.adjugate();
    for (int j = 0; j < 3; ++j) {
        Vec3 v{adj.at(0, j), adj.at(1, j), adj.at(2, j)};
        if (!v.is_zero()) return v;
    }
    // adj = 0: eigenspace has dimension >= 2; take any kernel vector
    // of the rank-1 matrix M
    for (int i = 0; i < 3; ++i) {
        Vec3 row{M.at(i, 0), M.at(i, 1), M.at(i, 2)};
        if (row.is_zero()) continue;
        // kernel of a single row (a,b,c): span{(-b,a,0),(-c,0,a),(0,-c,b)}
        Vec3 cands[3] = {
            {-row.c[1], row.c[0], CycNum::zero()},
            {-row.c[2], CycNum::zero(), row.c[0]},
            {CycNum::zero(), -row.c[2], row.c[1]},
        };
        for (auto& v : cands)
            if (!v.is_zero()) return v;
    }
    throw std::domain_error("eigenvector: matrix is scalar");
}

namespace {

// Goldman's discriminant: f(tau) = |tau|^4 - 8 Re(tau^3) + 18 |tau|^2 - 27.
// For A in SU(2,1): f > 0 iff loxodromic, f < 0 iff regular elliptic,
// f = 0 iff A has a repeated eigenvalue (reflections, parabolics, scalars).
CycNum goldman(const CycNum& tau) {
    CycNum n2 = tau.norm2();
    CycNum re3 = (tau.pow(3) + tau.conj().pow(3));
    return n2 * n2 - CycNum(4) * re3 + CycNum(18) * n2 - CycNum(27);
}

std::optional<std::pair<long, long>> turn_of_ratio(const CycNum& ratio) {
    long k, M;
    if (!ratio.as_root_of_unity(k, M)) return std::nullopt;
    // normalize to (-1/2, 1/2]
    long kk = k % M;
    if (kk < 0) kk += M;
    if (2 * kk > M) kk -= M;
    long g = std::gcd(std::abs(kk), M);
    if (kk == 0) return std::make_pair(0L, 1L);
    return std::make_pair(kk / g, M / g);
}

// repeated eigenvalue lambda0 (and the remaining one mu) of an SU(2,1) matrix
// with vanishing Goldman discriminant, from the gcd of chi and chi'
void repeated_eigenvalues(const CycNum& tau, CycNum& lambda0, CycNum& mu) {
    CycNum ct = tau.conj();
    std::array<CycNum, 4> r = {-CycNum::one(), ct, -tau, CycNum::one()};
    std::array<CycNum, 3> dchi = {ct, -CycNum(2) * tau, CycNum(3)};
    CycNum f3 = r[3] * CycNum(mpq_class(1, 3));
    r[2] = r[2] - f3 * dchi[1];
    r[1] = r[1] - f3 * dchi[0];
    CycNum f2 = r[2] * CycNum(mpq_class(1, 3));
    r[1] = r[1] - f2 * dchi[1];
    r[0] = r[0] - f2 * dchi[0];
    if (r[1].is_zero() && r[0].is_zero()) {
        lambda0 = tau * CycNum(mpq_class(1, 3));  // triple eigenvalue
    } else if (!r[1].is_zero()) {
        lambda0 = -(r[0] / r[1]);
    } else {
        throw std::logic_error("repeated_eigenvalues: no common root found");
    }
    mu = tau - lambda0 - lambda0;
}

// scale by a root of unity so the determinant becomes 1 (lifting the
// conductor when the cube root is not in the entry field)
Mat3 normalize_to_su(const Mat3& A) {
    CycNum d = A.det();
    if (d.is_zero()) throw std::domain_error("classify: singular matrix");
    if (d.is_one()) return A;
    long k, M;
    if (!d.as_root_of_unity(k, M))
        throw std::domain_error("classify: determinant is not a root of unity");
    CycNum c = CycNum::root_of_unity(3 * M, k);  // c^3 = d
    return A * c.inverse();
}

}  // namespace

std::string IsometryType::describe() const {
    switch (cls) {
        case IsometryClass::Scalar: return "scalar";
        case IsometryClass::RegularElliptic: return "regular-elliptic";
        case IsometryClass::ComplexReflectionLine: {
            std::string s = "reflection-in-line";
            if (turn) s += " angle 2pi*" + std::to_string(turn->first) + "/" + std::to_string(turn->second);
            return s;
        }
        case IsometryClass::ComplexReflectionPoint: {
            std::string s = "reflection-in-point";
            if (turn) s += " angle 2pi*" + std::to_string(turn->first) + "/" + std::to_string(turn->second);
            return s;
        }
        case IsometryClass::Parabolic: return "parabolic";
        case IsometryClass::Loxodromic: return "loxodromic";
    }
    return "?";
}

IsometryType classify(const Mat3& A0, const HermForm& H) {
    Mat3 A = normalize_to_su(A0);
    if (!(A.conj_transpose() * H.mat() * A == H.mat()))
        throw std::domain_error("classify: matrix does not preserve the form");
    if (A.scalar_value()) return {IsometryClass::Scalar, std::nullopt};
    CycNum tau = A.trace();
    int s = goldman(tau).real_sign();
    if (s > 0) return {IsometryClass::Loxodromic, std::nullopt};
    if (s < 0) return {IsometryClass::RegularElliptic, std::nullopt};
    CycNum lambda0, mu;
    repeated_eigenvalues(tau, lambda0, mu);
    Mat3 E = A;
    for (int i = 0; i < 3; ++i) E.at(i, i) = E.at(i, i) - lambda0;
    int rk = rank(E);
    if (rk >= 2 || mu == lambda0) return {IsometryClass::Parabolic, std::nullopt};
    // diagonalizable reflection: eigenvector of the simple eigenvalue
    Vec3 v = eigenvector(A, mu);
    int ns = H.norm_sign(v);
    auto turn = turn_of_ratio(mu / lambda0);
    if (ns > 0) return {IsometryClass::ComplexReflectionLine, turn};
    if (ns < 0) return {IsometryClass::ComplexReflectionPoint, turn};
    return {IsometryClass::Parabolic, std::nullopt};  // polar vector on the boundary
}

Vec3 reflection_polar(const Mat3& A0, const HermForm& H) {
    Mat3 A = normalize_to_su(A0);
    CycNum tau = A.trace();
    if (!goldman(tau).is_zero())
        throw std::domain_error("reflection_polar: no repeated eigenvalue");
    CycNum lambda0, mu;
    repeated_eigenvalues(tau, lambda0, mu);
    if (mu == lambda0) throw std::domain_error("reflection_polar: not a complex reflection");
    Mat3 E = A;
    for (int i = 0; i < 3; ++i) E.at(i, i) = E.at(i, i) - lambda0;
    if (rank(E) != 1) throw std::domain_error("reflection_polar: parabolic element");
    return eigenvector(A, mu);
}

}  // namespace hypershell

#pragma once

// Dense spin-1/2 algebra: spinors, 2x2 complex matrices and Pauli rotations.
//
// Conventions (hbar = 1, I_j = sigma_j / 2):
//   rot_j(a) = exp(-i sigma_j a / 2)
// so the operator e^{ I_j a/(i hbar)} is rot_j(a) and e^{-I_j a/(i hbar)} is rot_j(-a).

#include <array>
#include <complex>
#include <cstddef>

namespace spinres {

using cplx = std::complex<double>;

/// Spin-1/2 state (up, down) in the I_z eigenbasis.
struct Spinor {
    cplx up{};
    cplx down{};

    static constexpr Spinor spin_up() { return {cplx{1.0, 0.0}, cplx{0.0, 0.0}}; }
    static constexpr Spinor spin_down() { return {cplx{0.0, 0.0}, cplx{1.0, 0.0}}; }

    double norm_squared() const { return std::norm(up) + std::norm(down); }
    bool is_normalized(double tol = 1e-12) const;
    Spinor normalized() const;

    friend Spinor operator*(cplx s, const Spinor& v) { return {s * v.up, s * v.down}; }
    friend Spinor operator+(const Spinor& a, const Spinor& b) { return {a.up + b.up, a.down + b.down}; }
    friend Spinor operator-(const Spinor& a, const Spinor& b) { return {a.up - b.up, a.down - b.down}; }
};

/// <a|b>
cplx inner(const Spinor& a, const Spinor& b);

/// Plain 2x2 complex matrix, row-major. No invariants.
struct Mat2 {
    std::array<cplx, 4> e{};

    constexpr cplx& operator()(std::size_t r, std::size_t c) { return e[2 * r + c]; }
    constexpr const cplx& operator()(std::size_t r, std::size_t c) const { return e[2 * r + c]; }

    static constexpr Mat2 identity() { return {{cplx{1.0}, cplx{0.0}, cplx{0.0}, cplx{1.0}}}; }

    cplx det() const { return e[0] * e[3] - e[1] * e[2]; }
    Mat2 adjoint() const;
    /// Largest entrywise modulus of (this - other).
    double max_abs_diff(const Mat2& other) const;

    friend Mat2 operator*(const Mat2& a, const Mat2& b);
    friend Mat2 operator+(const Mat2& a, const Mat2& b);
    friend Mat2 operator-(const Mat2& a, const Mat2& b);
    friend Mat2 operator*(cplx s, const Mat2& m);
    friend Spinor operator*(const Mat2& m, const Spinor& v);
};

namespace pauli {
inline constexpr Mat2 x{{cplx{0.0}, cplx{1.0}, cplx{1.0}, cplx{0.0}}};
inline constexpr Mat2 y{{cplx{0.0}, cplx{0.0, -1.0}, cplx{0.0, 1.0}, cplx{0.0}}};
inline constexpr Mat2 z{{cplx{1.0}, cplx{0.0}, cplx{0.0}, cplx{-1.0}}};
}  // namespace pauli

/// Element of U(2). Only constructible from rotations, products and adjoints,
/// so unitarity holds up to accumulated rounding.
class Unitary2 {
public:
    Unitary2() : m_(Mat2::identity()) {}

    static Unitary2 identity() { return {}; }

    const Mat2& matrix() const { return m_; }
    cplx operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

    /// |U_10|^2, the transition probability between the two basis ends.
    double off_diagonal_norm() const { return std::norm(m_(1, 0)); }
    /// |U_00|^2, the survival probability.
    double diagonal_norm() const { return std::norm(m_(0, 0)); }

    /// max |(U^dagger U - 1)_ij|.
    double unitarity_defect() const;

    friend Unitary2 operator*(const Unitary2& a, const Unitary2& b) { return Unitary2(a.m_ * b.m_); }
    friend Spinor operator*(const Unitary2& u, const Spinor& v) { return u.m_ * v; }

    friend Unitary2 rot_z(double angle);
    friend Unitary2 rot_y(double angle);
    friend Unitary2 dagger(const Unitary2& u);
    friend class Hermitian2;

private:
    explicit Unitary2(const Mat2& m) : m_(m) {}
    Mat2 m_;
};

/// exp(-i sigma_z angle/2) = diag(e^{-i angle/2}, e^{+i angle/2}). Throws std::domain_error on non-finite angle.
Unitary2 rot_z(double angle);
/// exp(-i sigma_y angle/2) = [[cos, -sin], [sin, cos]] of angle/2. Throws std::domain_error on non-finite angle.
Unitary2 rot_y(double angle);
Unitary2 multiply(const Unitary2& a, const Unitary2& b);
Unitary2 dagger(const Unitary2& u);

/// Equal up to a global phase factor.
bool equal_up_to_phase(const Unitary2& a, const Unitary2& b, double tol);

/// Hermitian 2x2 operator, stored as a0*1 + a.sigma with real coefficients.
class Hermitian2 {
public:
    Hermitian2() = default;
    Hermitian2(double a0, double ax, double ay, double az) : a0_(a0), a_{ax, ay, az} {}

    double identity_part() const { return a0_; }
    const std::array<double, 3>& pauli_part() const { return a_; }

    Mat2 matrix() const;
    /// Ascending eigenvalues a0 -+ |a|.
    std::array<double, 2> eigenvalues() const;
    /// exp(-i H dt), evaluated in closed form.
    Unitary2 evolution(double dt) const;

    friend Spinor operator*(const Hermitian2& h, const Spinor& v) { return h.matrix() * v; }
    friend Hermitian2 operator*(double s, const Hermitian2& h)
    {
        return {s * h.a0_, s * h.a_[0], s * h.a_[1], s * h.a_[2]};
    }

private:
    double a0_ = 0.0;
    std::array<double, 3> a_{};
};

/// |<final_basis| u |initial>|^2. Both spinors must be normalized (1e-12), else std::domain_error.
double transition_probability(const Spinor& final_basis, const Unitary2& u, const Spinor& initial);

}  // namespace spinres

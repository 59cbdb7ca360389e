#include "spinres/su2.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spinres {

namespace {

void require_finite(double angle, const char* who)
{
    if (!std::isfinite(angle)) {
        throw std::domain_error(std::string(who) + ": rotation angle must be finite");
    }
}

}  // namespace

bool Spinor::is_normalized(double tol) const
{
    return std::abs(norm_squared() - 1.0) <= tol;
}

Spinor Spinor::normalized() const
{
    const double n = std::sqrt(norm_squared());
    if (n == 0.0 || !std::isfinite(n)) {
        throw std::domain_error("Spinor::normalized: zero or non-finite state");
    }
    return cplx{1.0 / n} * *this;
}

cplx inner(const Spinor& a, const Spinor& b)
{
    return std::conj(a.up) * b.up + std::conj(a.down) * b.down;
}

Mat2 Mat2::adjoint() const
{
    return {{std::conj(e[0]), std::conj(e[2]), std::conj(e[1]), std::conj(e[3])}};
}

double Mat2::max_abs_diff(const Mat2& other) const
{
    double worst = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        worst = std::max(worst, std::abs(e[i] - other.e[i]));
    }
    return worst;
}

Mat2 operator*(const Mat2& a, const Mat2& b)
{
    return {{a.e[0] * b.e[0] + a.e[1] * b.e[2], a.e[0] * b.e[1] + a.e[1] * b.e[3],
             a.e[2] * b.e[0] + a.e[3] * b.e[2], a.e[2] * b.e[1] + a.e[3] * b.e[3]}};
}

Mat2 operator+(const Mat2& a, const Mat2& b)
{
    return {{a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2], a.e[3] + b.e[3]}};
}

Mat2 operator-(const Mat2& a, const Mat2& b)
{
    return {{a.e[0] - b.e[0], a.e[1] - b.e[1], a.e[2] - b.e[2], a.e[3] - b.e[3]}};
}

Mat2 operator*(cplx s, const Mat2& m)
{
    return {{s * m.e[0], s * m.e[1], s * m.e[2], s * m.e[3]}};
}

Spinor operator*(const Mat2& m, const Spinor& v)
{
    return {m.e[0] * v.up + m.e[1] * v.down, m.e[2] * v.up + m.e[3] * v.down};
}

double Unitary2::unitarity_defect() const
{
    return (m_.adjoint() * m_).max_abs_diff(Mat2::identity());
}

Unitary2 rot_z(double angle)
{
    require_finite(angle, "rot_z");
    const double h = 0.5 * angle;
    const cplx lower{std::cos(h), -std::sin(h)};
    return Unitary2(Mat2{{lower, cplx{0.0}, cplx{0.0}, std::conj(lower)}});
}

Unitary2 rot_y(double angle)
{
    require_finite(angle, "rot_y");
    const double c = std::cos(0.5 * angle);
    const double s = std::sin(0.5 * angle);
    return Unitary2(Mat2{{cplx{c}, cplx{-s}, cplx{s}, cplx{c}}});
}

Unitary2 multiply(const Unitary2& a, const Unitary2& b)
{
    return a * b;
}

Unitary2 dagger(const Unitary2& u)
{
    return Unitary2(u.m_.adjoint());
}

bool equal_up_to_phase(const Unitary2& a, const Unitary2& b, double tol)
{
    // Align phases on the largest entry of b, then compare entrywise.
    const Mat2& ma = a.matrix();
    const Mat2& mb = b.matrix();
    std::size_t pivot = 0;
    for (std::size_t i = 1; i < 4; ++i) {
        if (std::abs(mb.e[i]) > std::abs(mb.e[pivot])) {
            pivot = i;
        }
    }
    const cplx ratio = ma.e[pivot] / mb.e[pivot];
    if (std::abs(ratio) == 0.0 || !std::isfinite(std::abs(ratio))) {
        return false;
    }
    const cplx phase = ratio / std::abs(ratio);
    return ma.max_abs_diff(phase * mb) <= tol;
}

Mat2 Hermitian2::matrix() const
{
    return cplx{a0_} * Mat2::identity() + cplx{a_[0]} * pauli::x + cplx{a_[1]} * pauli::y
           + cplx{a_[2]} * pauli::z;
}

std::array<double, 2> Hermitian2::eigenvalues() const
{
    const double r = std::hypot(a_[0], a_[1], a_[2]);
    return {a0_ - r, a0_ + r};
}

Unitary2 Hermitian2::evolution(double dt) const
{
    // exp(-i (a0 + a.sigma) dt) = e^{-i a0 dt} (cos(|a| dt) - i sin(|a| dt) n.sigma)
    const double r = std::hypot(a_[0], a_[1], a_[2]);
    const double c = std::cos(r * dt);
    // sin(r dt)/r, finite as r -> 0
    const double sinc = r * dt == 0.0 ? dt : std::sin(r * dt) / r;
    const cplx mi{0.0, -1.0};
    Mat2 m = cplx{c} * Mat2::identity()
             + (mi * sinc) * (cplx{a_[0]} * pauli::x + cplx{a_[1]} * pauli::y + cplx{a_[2]} * pauli::z);
    const cplx phase = std::polar(1.0, -a0_ * dt);
    return Unitary2(phase * m);
}

double transition_probability(const Spinor& final_basis, const Unitary2& u, const Spinor& initial)
{
    if (!final_basis.is_normalized() || !initial.is_normalized()) {
        throw std::domain_error("transition_probability: basis and initial states must be normalized");
    }
    return std::norm(inner(final_basis, u * initial));
}

}  // namespace spinres

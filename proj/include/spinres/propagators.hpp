#pragma once

// Closed-form operator products for the rotating-field problem.
//
// Every builder lists its factors left to right in the order they are applied
// from the left, using rot_j(a) for e^{I_j a/(i hbar)} and rot_j(-a) for
// e^{-I_j a/(i hbar)}.

#include "spinres/model.hpp"
#include "spinres/su2.hpp"

namespace spinres {

/// Spin projection label m = +1/2 or -1/2.
enum class SpinLabel { up, down };

/// Observation frame (alpha, beta): alpha about z (fixed or co-rotating, alpha = -omega t), beta about y.
struct FrameLabel {
    enum class Alpha { fixed, co_rotating };

    Alpha alpha_kind = Alpha::fixed;
    double alpha = 0.0;  ///< used when alpha_kind == fixed
    double beta = 0.0;   ///< [0, pi]

    static FrameLabel laboratory() { return {}; }
    /// (-omega t, theta): follows H(t).
    static FrameLabel rotating_field(const DerivedFrequencies& d);
    /// (-omega t, Theta): diagonalizes the rotating-frame Hamiltonian.
    static FrameLabel spin_dynamical(const DerivedFrequencies& d);

    double alpha_at(const DerivedFrequencies& d, double t) const;
    /// Maps frame coordinates to laboratory coordinates at time t: rot_z(alpha) rot_y(beta).
    Unitary2 to_laboratory(const DerivedFrequencies& d, double t) const;
    /// The frame's basis ket |m> expressed in laboratory coordinates.
    Spinor basis_ket(const DerivedFrequencies& d, double t, SpinLabel m) const;
};

/// Exact laboratory propagator from t1 to t2:
/// rot_z(-omega t2) rot_y(Theta) rot_z(-Omega (t2 - t1)) rot_y(-Theta) rot_z(omega t1).
/// Throws std::domain_error if t2 < t1.
Unitary2 lab_propagator(const DerivedFrequencies& d, double t1, double t2);

/// Rotating-field-frame propagator: rot_y(Gamma) rot_z(-Omega tau) rot_y(-Gamma).
Unitary2 rotating_field_propagator(const DerivedFrequencies& d, double tau);

/// Kinematic factor of the moving observation frame: rot_y(-theta) rot_z(-omega tau) rot_y(theta).
Unitary2 kinematic_rotation(const DerivedFrequencies& d, double tau);

/// Dual-frame product rotating_field_propagator(tau) * kinematic_rotation(tau).
/// |off-diagonal|^2 is the unified transition probability.
Unitary2 dual_frame_matrix(const DerivedFrequencies& d, double tau);

/// Eigenstate of the instantaneous quantization operator I_H(t) with eigenvalue m:
/// rot_z(-omega t) rot_y(theta) |m>.
Spinor rotating_basis(const DerivedFrequencies& d, double t, SpinLabel m);

/// H(t) = -(I_z omega0 + I_x omega1 cos(omega t) - I_y omega1 sin(omega t)). Spectrum {-omega_bar/2, +omega_bar/2}.
Hermitian2 instantaneous_hamiltonian(const DerivedFrequencies& d, double t);

/// I_H(t) = I . H(t) / H. Requires omega_bar > 0.
Hermitian2 quantization_operator(const DerivedFrequencies& d, double t);

}  // namespace spinres

#pragma once

namespace spinres {

/// Physical inputs of the rotating field H(t) = H (cos phi sin theta, sin phi sin theta, cos theta), phi = -omega t.
struct FieldParams {
    double gamma = 1.0;  ///< gyromagnetic ratio, rad/s per field unit, > 0
    double field = 0.0;  ///< amplitude H >= 0
    double theta = 0.0;  ///< polar angle of the field, [0, pi]
    double omega = 0.0;  ///< rotation frequency of the field, >= 0 (rad/s)

    /// Throws std::domain_error when any invariant is violated.
    void validate() const;
};

/// Every frequency and angle the propagators and closed forms consume.
struct DerivedFrequencies {
    double omega_bar = 0.0;  ///< gamma H
    double omega0 = 0.0;     ///< omega_bar cos theta
    double omega1 = 0.0;     ///< omega_bar sin theta
    double omega = 0.0;      ///< drive frequency
    double big_omega = 0.0;  ///< Rabi frequency sqrt((omega0 - omega)^2 + omega1^2)
    double theta_cap = 0.0;  ///< tilt of the effective rotating-frame field, [0, pi]
    double gamma_cap = 0.0;  ///< theta_cap - theta
    double theta = 0.0;      ///< field polar angle
};

/// Derives the characteristic frequencies. Theta_cap = atan2(omega1, omega0 - omega).
/// Throws DegenerateDetuningError when big_omega == 0.
DerivedFrequencies derive(const FieldParams& params);

/// Frequency parametrization: gamma = 1, H = hypot(omega0, omega1), theta = atan2(omega1, omega0).
/// Throws std::domain_error if omega1 < 0, omega < 0, or omega0 = omega1 = 0.
FieldParams from_frequencies(double omega0, double omega1, double omega);

/// Shorthand for derive(from_frequencies(...)).
DerivedFrequencies derive_from_frequencies(double omega0, double omega1, double omega);

}  // namespace spinres

// State-vector algebra for the four-level atom and the SU(2) reference rotation.
//
// Basis ordering is {|1>, |2>, |3>, |4>}: |1>,|2> span the qubit, |3> is the
// auxiliary ground state and |4> the common excited state.

#pragma once

#include <complex>
#include <stdexcept>
#include <utility>

#include <Eigen/Dense>

namespace stirap {

using Complex = std::complex<double>;
using StateVector = Eigen::Vector4cd;
using QubitMatrix = Eigen::Matrix2cd;
using BlochAxis = Eigen::Vector3d;

inline constexpr Complex kI{0.0, 1.0};

/// Tolerances used by the input checks of this module.
struct StateTolerances {
    double normalization = 1e-12;
    double axis_norm = 1e-9;
    double degenerate_projection = 1e-12;
};

inline constexpr StateTolerances kStateTolerances{};

class DegenerateProjectionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Qubit amplitudes alpha|1> + beta|2>. Always normalized.
class QubitState {
public:
    /// Normalizes (alpha, beta). Throws std::invalid_argument for the zero vector
    /// or non-finite amplitudes.
    QubitState(Complex alpha, Complex beta);

    /// Basis state |1>.
    QubitState() : alpha_(1.0), beta_(0.0) {}

    Complex alpha() const { return alpha_; }
    Complex beta() const { return beta_; }
    Eigen::Vector2cd vector() const { return {alpha_, beta_}; }

    static QubitState from_vector(const Eigen::Vector2cd &v) { return {v(0), v(1)}; }

    QubitState with_phase(double phase) const;

private:
    Complex alpha_;
    Complex beta_;
};

/// <a|b> on the qubit subspace.
Complex inner(const QubitState &a, const QubitState &b);

/// Rotation angles set by the lasers: chi fixes the polar angle 2*chi of the
/// axis, eta its azimuth, delta the rotation angle.
struct RotationSpec {
    double chi = 0.0;
    double eta = 0.0;
    double delta = 0.0;

    /// n = (sin2chi cos eta, sin2chi sin eta, cos2chi)
    BlochAxis axis() const;
    /// Global phase carried by the two-process protocol, -delta/2.
    double global_phase() const { return -0.5 * delta; }
};

/// n . sigma with sigma_x = |1><2| + |2><1|, sigma_y = i(|2><1| - |1><2|),
/// sigma_z = |1><1| - |2><2|.
QubitMatrix pauli_dot(const BlochAxis &n);

/// R_n(angle) = cos(angle/2) - i (n.sigma) sin(angle/2). Throws
/// std::invalid_argument if |n| deviates from 1 by more than the axis tolerance.
QubitMatrix rotation_matrix(const BlochAxis &n, double angle);

QubitState rotate_analytic(const QubitState &q, const BlochAxis &n, double angle);

/// Prediction for the protocol output, e^{-i delta/2} R_n(delta) q, phase included.
QubitState predicted_final(const QubitState &q, const RotationSpec &spec);

/// Full map e^{-i delta/2} R_n(delta) as a matrix.
QubitMatrix predicted_map(const RotationSpec &spec);

StateVector embed(const QubitState &q);

struct QubitProjection {
    QubitState qubit;
    /// |<3|psi>|^2 + |<4|psi>|^2
    double leakage = 0.0;
};

/// Renormalized qubit part of s. Throws DegenerateProjectionError when both
/// qubit amplitudes are below 1e-12.
QubitProjection project_qubit(const StateVector &s);

inline double population(const StateVector &s, int level) { return std::norm(s(level)); }

}  // namespace stirap

#include "stirap/states.hpp"

#include <cmath>

namespace stirap {

QubitState::QubitState(Complex alpha, Complex beta) {
    const double norm = std::sqrt(std::norm(alpha) + std::norm(beta));
    if (!std::isfinite(norm) || norm == 0.0) {
        throw std::invalid_argument("qubit amplitudes must be finite and not both zero");
    }
    alpha_ = alpha / norm;
    beta_ = beta / norm;
}

QubitState QubitState::with_phase(double phase) const {
    const Complex factor = std::polar(1.0, phase);
    return {factor * alpha_, factor * beta_};
}

Complex inner(const QubitState &a, const QubitState &b) {
    return std::conj(a.alpha()) * b.alpha() + std::conj(a.beta()) * b.beta();
}

BlochAxis RotationSpec::axis() const {
    const double polar = 2.0 * chi;
    return {std::sin(polar) * std::cos(eta), std::sin(polar) * std::sin(eta), std::cos(polar)};
}

QubitMatrix pauli_dot(const BlochAxis &n) {
    QubitMatrix m;
    m << n.z(), Complex(n.x(), -n.y()),
         Complex(n.x(), n.y()), -n.z();
    return m;
}

QubitMatrix rotation_matrix(const BlochAxis &n, double angle) {
    if (std::abs(n.norm() - 1.0) > kStateTolerances.axis_norm) {
        throw std::invalid_argument("rotation axis must be a unit vector");
    }
    return std::cos(0.5 * angle) * QubitMatrix::Identity() - kI * std::sin(0.5 * angle) * pauli_dot(n);
}

QubitState rotate_analytic(const QubitState &q, const BlochAxis &n, double angle) {
    return QubitState::from_vector(rotation_matrix(n, angle) * q.vector());
}

QubitMatrix predicted_map(const RotationSpec &spec) {
    return std::polar(1.0, spec.global_phase()) * rotation_matrix(spec.axis(), spec.delta);
}

QubitState predicted_final(const QubitState &q, const RotationSpec &spec) {
    if (spec.delta == 0.0) {
        return q;
    }
    return QubitState::from_vector(predicted_map(spec) * q.vector());
}

StateVector embed(const QubitState &q) {
    return {q.alpha(), q.beta(), 0.0, 0.0};
}

QubitProjection project_qubit(const StateVector &s) {
    const double tol = kStateTolerances.degenerate_projection;
    if (std::abs(s(0)) < tol && std::abs(s(1)) < tol) {
        throw DegenerateProjectionError("state has no weight in the qubit subspace");
    }
    return {QubitState(s(0), s(1)), std::norm(s(2)) + std::norm(s(3))};
}

}  // namespace stirap

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Two-qubit spin state left by the interferometers, dephasing of its density
// matrix, and the entanglement-witness expectation with the gamma t < Phi/2
// detectability criterion.
//
// Basis order throughout: |uu>, |ud>, |du>, |dd> (qubit 1 first).

namespace qgem {

struct SpinState {
    Eigen::Vector4cd amplitudes;

    double norm() const { return amplitudes.norm(); }
    void validate() const;  // normalized to 1e-12
};

struct DensityMatrix {
    Eigen::Matrix4cd m;

    double trace_real() const { return m.trace().real(); }
    // Hermitian, unit trace, eigenvalues >= -1e-10.
    void validate() const;
    Eigen::Vector4d eigenvalues() const;
};

// Hermitian combination of Pauli-string terms, e.g. {1,"II"},{-1,"XX"}.
struct WitnessOperator {
    std::vector<std::pair<double, std::string>> terms;

    Eigen::Matrix4cd matrix() const;
    void validate() const;
};

namespace witness {

enum class DephasingMode {
    // Every off-diagonal element is suppressed by exp(-gamma t); reproduces
    // the gamma t < Phi/2 detectability boundary. Default.
    joint,
    // Independent per-particle dephasing: element (j,k) is suppressed by
    // exp(-gamma t h) with h the number of qubits whose index differs
    // between bra and ket.
    per_particle,
};

/// Witness detecting the interferometer output states:
/// I(x)I - sx(x)sx - sy(x)sz - sx(x)sz.
const WitnessOperator& default_witness();

/// Parse a witness from a sign-separated Pauli-string list, e.g.
/// "II - XX - YZ - XZ".
WitnessOperator parse_witness(std::string_view text);

/// Output state (1/2)(|uu> + e^{i dphi_ud}|ud> + e^{i dphi_du}|du> + |dd>),
/// global phase dropped.
SpinState entangled_state(double dphi_ud, double dphi_du);

/// Projector onto the state with off-diagonals damped by the accumulated
/// exponent gamma_t >= 0.
DensityMatrix dephase(const SpinState& state, double gamma_t,
                      DephasingMode mode = DephasingMode::joint);

/// Tr(W rho); real within 1e-12 for Hermitian inputs (validated).
double expectation(const DensityMatrix& rho, const WitnessOperator& w);

struct Detectability {
    bool detectable = false;
    double margin = 0.0;  // Phi/2 - gamma t_int, rad
};

/// Analytic criterion gamma t_int < Phi_eff / 2.
Detectability detectability(double phi_eff, double gamma, double t_int);

/// gamma_t at which Tr(W rho) crosses zero for the state family above,
/// located by bisection. Throws NoSolutionError if there is no crossing in
/// [0, limit].
double witness_zero_crossing(double dphi_ud, double dphi_du,
                             const WitnessOperator& w,
                             DephasingMode mode = DephasingMode::joint,
                             double limit = 1.0);

} // namespace witness
} // namespace qgem

#include "qgem/witness.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

#include "qgem/errors.hpp"

namespace qgem {

namespace {

using Complex = std::complex<double>;

Eigen::Matrix2cd pauli(char label) {
    Eigen::Matrix2cd p;
    switch (label) {
        case 'I': p << 1, 0, 0, 1; break;
        case 'X': p << 0, 1, 1, 0; break;
        case 'Y': p << 0, Complex(0, -1), Complex(0, 1), 0; break;
        case 'Z': p << 1, 0, 0, -1; break;
        default:
            throw ValidationError(std::string("unknown Pauli label: ") + label);
    }
    return p;
}

Eigen::Matrix4cd kron2(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
    Eigen::Matrix4cd out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return out;
}

bool is_hermitian(const Eigen::Matrix4cd& m, double tol) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

} // namespace

void SpinState::validate() const {
    if (std::abs(norm() - 1.0) > 1e-12)
        throw ValidationError("SpinState: not normalized");
}

void DensityMatrix::validate() const {
    if (!is_hermitian(m, 1e-12))
        throw ValidationError("DensityMatrix: not Hermitian");
    if (std::abs(m.trace().real() - 1.0) > 1e-12 || std::abs(m.trace().imag()) > 1e-12)
        throw ValidationError("DensityMatrix: trace is not 1");
    if (eigenvalues().minCoeff() < -1e-10)
        throw ValidationError("DensityMatrix: not positive semidefinite");
}

Eigen::Vector4d DensityMatrix::eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(m);
    return solver.eigenvalues();
}

Eigen::Matrix4cd WitnessOperator::matrix() const {
    Eigen::Matrix4cd out = Eigen::Matrix4cd::Zero();
    for (const auto& [coeff, label] : terms) {
        if (label.size() != 2)
            throw ValidationError("WitnessOperator: term labels must be two Pauli letters");
        out += coeff * kron2(pauli(label[0]), pauli(label[1]));
    }
    return out;
}

void WitnessOperator::validate() const {
    if (!is_hermitian(matrix(), 1e-12))
        throw ValidationError("WitnessOperator: not Hermitian");
}

namespace witness {

const WitnessOperator& default_witness() {
    static const WitnessOperator w{
        {{1.0, "II"}, {-1.0, "XX"}, {-1.0, "YZ"}, {-1.0, "XZ"}}};
    return w;
}

WitnessOperator parse_witness(std::string_view text) {
    WitnessOperator w;
    double sign = 1.0;
    std::string label;
    const auto flush = [&] {
        if (label.empty()) return;
        if (label.size() != 2)
            throw ParseError("witness term must be two Pauli letters, got: " + label);
        w.terms.emplace_back(sign, label);
        label.clear();
        sign = 1.0;
    };
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '+' || c == '-') {
            flush();
            sign = (c == '-') ? -1.0 : 1.0;
        } else {
            label.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
        }
    }
    flush();
    if (w.terms.empty()) throw ParseError("empty witness expression");
    w.validate();  // rejects unknown Pauli labels up front
    return w;
}

SpinState entangled_state(double dphi_ud, double dphi_du) {
    SpinState s;
    s.amplitudes << 0.5, 0.5 * std::exp(Complex(0.0, dphi_ud)),
        0.5 * std::exp(Complex(0.0, dphi_du)), 0.5;
    return s;
}

DensityMatrix dephase(const SpinState& state, double gamma_t, DephasingMode mode) {
    if (!(gamma_t >= 0.0)) throw ValidationError("dephase: gamma_t must be >= 0");
    DensityMatrix rho;
    rho.m = state.amplitudes * state.amplitudes.adjoint();
    for (int j = 0; j < 4; ++j) {
        for (int k = 0; k < 4; ++k) {
            if (j == k) continue;
            double h = 1.0;
            if (mode == DephasingMode::per_particle) {
                // Count single-qubit index mismatches between bra and ket.
                h = static_cast<double>(((j >> 1) != (k >> 1)) + ((j & 1) != (k & 1)));
            }
            rho.m(j, k) *= std::exp(-gamma_t * h);
        }
    }
    return rho;
}

double expectation(const DensityMatrix& rho, const WitnessOperator& w) {
    if (!is_hermitian(rho.m, 1e-12))
        throw ValidationError("expectation: rho is not Hermitian");
    const Eigen::Matrix4cd wm = w.matrix();
    if (!is_hermitian(wm, 1e-12))
        throw ValidationError("expectation: witness is not Hermitian");
    const Complex tr = (wm * rho.m).trace();
    return tr.real();
}

Detectability detectability(double phi_eff, double gamma, double t_int) {
    if (!(phi_eff >= 0.0)) throw ValidationError("detectability: phi_eff must be >= 0");
    Detectability out;
    out.margin = 0.5 * phi_eff - gamma * t_int;
    out.detectable = out.margin > 0.0;
    return out;
}

double witness_zero_crossing(double dphi_ud, double dphi_du, const WitnessOperator& w,
                             DephasingMode mode, double limit) {
    const SpinState state = entangled_state(dphi_ud, dphi_du);
    const auto value = [&](double gt) { return expectation(dephase(state, gt, mode), w); };
    double lo = 0.0;
    double hi = limit;
    const double f_lo = value(lo);
    if (!(f_lo < 0.0))
        throw NoSolutionError("witness_zero_crossing: witness does not flag the state at gamma_t = 0");
    if (!(value(hi) > 0.0))
        throw NoSolutionError("witness_zero_crossing: no sign change inside [0, limit]");
    for (int i = 0; i < 100; ++i) {
        const double mid = 0.5 * (lo + hi);
        (value(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace witness
} // namespace qgem

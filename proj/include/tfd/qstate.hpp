// Copyright 2026 The tfd-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense statevector and operator primitives.
//
// Wire convention: wire k is the k-th tensor factor and wire 0 is the most
// significant bit of a basis index, so |q0 q1 ... q_{n-1}> has index
// q0 * 2^{n-1} + ... + q_{n-1}.

#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numbers>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tfd {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr std::size_t kMaxWires = 10;
inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kAlgebraTolerance = 1e-10;

inline std::size_t dim_for_wires(std::size_t num_wires) {
    if (num_wires > kMaxWires) {
        throw std::length_error("tfd: " + std::to_string(num_wires) + " wires exceeds the supported maximum of " +
                                std::to_string(kMaxWires));
    }
    return std::size_t{1} << num_wires;
}

inline std::size_t wires_for_dim(std::size_t dim) {
    if (dim == 0 || (dim & (dim - 1)) != 0) {
        throw std::invalid_argument("tfd: dimension " + std::to_string(dim) + " is not a power of two");
    }
    std::size_t wires = 0;
    while ((std::size_t{1} << wires) < dim) ++wires;
    return wires;
}

/// Largest absolute entry of a matrix; the norm used for all tolerance checks.
inline double max_abs(const Matrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

// ---------------------------------------------------------------------------
// DenseOperator
// ---------------------------------------------------------------------------

/// Square complex matrix acting on a register of 2^k amplitudes.
class DenseOperator {
public:
    DenseOperator() : DenseOperator(Matrix::Identity(1, 1)) {}

    explicit DenseOperator(Matrix m) : m_(std::move(m)) {
        if (m_.rows() != m_.cols()) {
            throw std::invalid_argument("tfd: operator must be square");
        }
        num_wires_ = wires_for_dim(static_cast<std::size_t>(m_.rows()));
    }

    static DenseOperator identity(std::size_t num_wires) {
        const auto d = static_cast<Eigen::Index>(dim_for_wires(num_wires));
        return DenseOperator(Matrix::Identity(d, d));
    }

    static DenseOperator zero(std::size_t num_wires) {
        const auto d = static_cast<Eigen::Index>(dim_for_wires(num_wires));
        return DenseOperator(Matrix::Zero(d, d));
    }

    [[nodiscard]] std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
    [[nodiscard]] std::size_t num_wires() const { return num_wires_; }
    [[nodiscard]] const Matrix& matrix() const { return m_; }
    [[nodiscard]] Complex operator()(std::size_t r, std::size_t c) const {
        return m_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }

    [[nodiscard]] DenseOperator adjoint() const { return DenseOperator(m_.adjoint()); }

    [[nodiscard]] bool is_hermitian(double tol = kAlgebraTolerance) const {
        return max_abs(m_ - m_.adjoint()) <= tol;
    }
    [[nodiscard]] bool is_anti_hermitian(double tol = kAlgebraTolerance) const {
        return max_abs(m_ + m_.adjoint()) <= tol;
    }
    [[nodiscard]] double unitarity_residual() const {
        return max_abs(m_.adjoint() * m_ - Matrix::Identity(m_.rows(), m_.cols()));
    }
    [[nodiscard]] bool is_unitary(double tol = kAlgebraTolerance) const { return unitarity_residual() <= tol; }

    friend DenseOperator operator*(const DenseOperator& a, const DenseOperator& b) {
        require_same_dim(a, b);
        return DenseOperator(a.m_ * b.m_);
    }
    friend DenseOperator operator+(const DenseOperator& a, const DenseOperator& b) {
        require_same_dim(a, b);
        return DenseOperator(a.m_ + b.m_);
    }
    friend DenseOperator operator-(const DenseOperator& a, const DenseOperator& b) {
        require_same_dim(a, b);
        return DenseOperator(a.m_ - b.m_);
    }
    friend DenseOperator operator*(Complex s, const DenseOperator& a) { return DenseOperator(s * a.m_); }

private:
    static void require_same_dim(const DenseOperator& a, const DenseOperator& b) {
        if (a.dim() != b.dim()) {
            throw std::invalid_argument("tfd: operator dimension mismatch");
        }
    }

    Matrix m_;
    std::size_t num_wires_ = 0;
};

/// Kronecker product; the first factor acts on the lower-numbered wires.
inline DenseOperator kron(const DenseOperator& a, const DenseOperator& b) {
    const Matrix& x = a.matrix();
    const Matrix& y = b.matrix();
    Matrix out(x.rows() * y.rows(), x.cols() * y.cols());
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        for (Eigen::Index j = 0; j < x.cols(); ++j) {
            out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
        }
    }
    return DenseOperator(std::move(out));
}

// ---------------------------------------------------------------------------
// StateVector
// ---------------------------------------------------------------------------

class StateVector {
public:
    /// |0...0> on `num_wires` wires.
    explicit StateVector(std::size_t num_wires) : StateVector(basis(num_wires, 0)) {}

    static StateVector basis(std::size_t num_wires, std::size_t index) {
        if (num_wires == 0) throw std::invalid_argument("tfd: a state needs at least one wire");
        const std::size_t d = dim_for_wires(num_wires);
        if (index >= d) throw std::out_of_range("tfd: basis index out of range");
        Vector v = Vector::Zero(static_cast<Eigen::Index>(d));
        v(static_cast<Eigen::Index>(index)) = 1.0;
        return StateVector(num_wires, std::move(v));
    }

    /// Normalizes `amps`; throws on a zero vector or a length that is not 2^num_wires.
    static StateVector from_amplitudes(std::size_t num_wires, Vector amps) {
        if (num_wires == 0) throw std::invalid_argument("tfd: a state needs at least one wire");
        if (static_cast<std::size_t>(amps.size()) != dim_for_wires(num_wires)) {
            throw std::invalid_argument("tfd: amplitude vector length must be 2^num_wires");
        }
        const double n = amps.norm();
        if (!(n > 0.0) || !std::isfinite(n)) throw std::invalid_argument("tfd: cannot normalize a zero or non-finite vector");
        return StateVector(num_wires, amps / n);
    }

    [[nodiscard]] std::size_t num_wires() const { return num_wires_; }
    [[nodiscard]] std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }
    [[nodiscard]] const Vector& amplitudes() const { return amps_; }
    [[nodiscard]] Complex operator[](std::size_t i) const { return amps_(static_cast<Eigen::Index>(i)); }
    [[nodiscard]] double norm() const { return amps_.norm(); }

    [[nodiscard]] std::span<Complex> mutable_span() { return {amps_.data(), static_cast<std::size_t>(amps_.size())}; }

private:
    StateVector(std::size_t num_wires, Vector amps) : num_wires_(num_wires), amps_(std::move(amps)) {}

    friend StateVector apply_unitary(const StateVector& state, const DenseOperator& u);

    std::size_t num_wires_;
    Vector amps_;
};

/// Applies a dense unitary. Throws if dimensions differ or the result leaves the unit sphere.
inline StateVector apply_unitary(const StateVector& state, const DenseOperator& u) {
    if (u.dim() != state.dim()) throw std::invalid_argument("tfd: operator/state dimension mismatch");
    StateVector out(state.num_wires_, u.matrix() * state.amps_);
    if (std::abs(out.norm() - 1.0) > kAlgebraTolerance) {
        throw std::invalid_argument("tfd: operator is not norm preserving");
    }
    return out;
}

inline Complex inner_product(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("tfd: state dimension mismatch");
    return a.amplitudes().dot(b.amplitudes());  // conjugates the first argument
}

inline double fidelity(const StateVector& a, const StateVector& b) { return std::norm(inner_product(a, b)); }

// ---------------------------------------------------------------------------
// Gates and circuits
// ---------------------------------------------------------------------------

enum class GateKind { H, X, RX, RY, RZ, CNOT };

inline const char* gate_name(GateKind k) {
    switch (k) {
        case GateKind::H: return "H";
        case GateKind::X: return "X";
        case GateKind::RX: return "RX";
        case GateKind::RY: return "RY";
        case GateKind::RZ: return "RZ";
        case GateKind::CNOT: return "CNOT";
    }
    return "?";
}

/// A gate from the native set. For CNOT, `wire` is the target and `control` the control.
class Gate {
public:
    static Gate h(std::size_t w) { return {GateKind::H, w, 0, 0.0}; }
    static Gate x(std::size_t w) { return {GateKind::X, w, 0, 0.0}; }
    static Gate rx(std::size_t w, double angle) { return {GateKind::RX, w, 0, angle}; }
    static Gate ry(std::size_t w, double angle) { return {GateKind::RY, w, 0, angle}; }
    static Gate rz(std::size_t w, double angle) { return {GateKind::RZ, w, 0, angle}; }
    static Gate cnot(std::size_t control, std::size_t target) {
        if (control == target) throw std::invalid_argument("tfd: CNOT control and target must differ");
        return {GateKind::CNOT, target, control, 0.0};
    }

    [[nodiscard]] GateKind kind() const { return kind_; }
    [[nodiscard]] std::size_t target() const { return wire_; }
    [[nodiscard]] std::size_t control() const { return control_; }
    [[nodiscard]] double angle() const { return angle_; }
    [[nodiscard]] bool is_two_qubit() const { return kind_ == GateKind::CNOT; }

    /// Wires touched; control first for CNOT.
    [[nodiscard]] std::vector<std::size_t> wires() const {
        if (is_two_qubit()) return {control_, wire_};
        return {wire_};
    }

    /// 2x2 matrix for single-qubit gates; 4x4 with the control on the first factor for CNOT.
    [[nodiscard]] DenseOperator matrix() const {
        using namespace std::complex_literals;
        const double c = std::cos(angle_ / 2.0);
        const double s = std::sin(angle_ / 2.0);
        Matrix m(2, 2);
        switch (kind_) {
            case GateKind::H:
                m << 1.0, 1.0, 1.0, -1.0;
                m *= 1.0 / std::numbers::sqrt2;
                break;
            case GateKind::X: m << 0.0, 1.0, 1.0, 0.0; break;
            case GateKind::RX: m << c, -1i * s, -1i * s, c; break;
            case GateKind::RY: m << c, -s, s, c; break;
            case GateKind::RZ: m << std::exp(-0.5i * angle_), 0.0, 0.0, std::exp(0.5i * angle_); break;
            case GateKind::CNOT:
                m = Matrix::Zero(4, 4);
                m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
                break;
        }
        return DenseOperator(std::move(m));
    }

private:
    Gate(GateKind k, std::size_t w, std::size_t c, double a) : kind_(k), wire_(w), control_(c), angle_(a) {}

    GateKind kind_;
    std::size_t wire_;
    std::size_t control_;
    double angle_;
};

class Circuit {
public:
    explicit Circuit(std::size_t num_wires) : num_wires_(num_wires) {
        if (num_wires == 0) throw std::invalid_argument("tfd: circuit needs at least one wire");
        dim_for_wires(num_wires);
    }

    Circuit& add(const Gate& g) {
        for (std::size_t w : g.wires()) {
            if (w >= num_wires_) throw std::out_of_range("tfd: gate wire out of range");
        }
        gates_.push_back(g);
        return *this;
    }

    [[nodiscard]] std::size_t num_wires() const { return num_wires_; }
    [[nodiscard]] const std::vector<Gate>& gates() const { return gates_; }
    [[nodiscard]] std::size_t size() const { return gates_.size(); }

private:
    std::size_t num_wires_;
    std::vector<Gate> gates_;
};

namespace detail {

// In-place strided update over a 2^num_wires amplitude buffer.
inline void apply_gate_inplace(std::span<Complex> amps, std::size_t num_wires, const Gate& g) {
    const std::size_t dim = amps.size();
    const std::size_t target_bit = std::size_t{1} << (num_wires - 1 - g.target());
    if (g.kind() == GateKind::CNOT) {
        const std::size_t control_bit = std::size_t{1} << (num_wires - 1 - g.control());
        for (std::size_t i = 0; i < dim; ++i) {
            if ((i & control_bit) && !(i & target_bit)) std::swap(amps[i], amps[i | target_bit]);
        }
        return;
    }
    const Matrix u = g.matrix().matrix();
    const Complex u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
    for (std::size_t i = 0; i < dim; ++i) {
        if (i & target_bit) continue;
        const Complex a0 = amps[i];
        const Complex a1 = amps[i | target_bit];
        amps[i] = u00 * a0 + u01 * a1;
        amps[i | target_bit] = u10 * a0 + u11 * a1;
    }
}

inline void check_gate_wires(const Gate& g, std::size_t num_wires) {
    for (std::size_t w : g.wires()) {
        if (w >= num_wires) throw std::out_of_range("tfd: gate wire out of range");
    }
}

}  // namespace detail

inline StateVector apply_gate(StateVector state, const Gate& g) {
    detail::check_gate_wires(g, state.num_wires());
    detail::apply_gate_inplace(state.mutable_span(), state.num_wires(), g);
    return state;
}

inline StateVector apply_circuit(StateVector state, const Circuit& c) {
    if (c.num_wires() != state.num_wires()) throw std::invalid_argument("tfd: circuit/state wire mismatch");
    for (const Gate& g : c.gates()) detail::apply_gate_inplace(state.mutable_span(), state.num_wires(), g);
    return state;
}

/// Unitary of the whole circuit, built column by column with the strided kernel.
inline DenseOperator circuit_to_matrix(const Circuit& c) {
    const auto d = static_cast<Eigen::Index>(dim_for_wires(c.num_wires()));
    Matrix u = Matrix::Identity(d, d);
    for (Eigen::Index col = 0; col < d; ++col) {
        std::span<Complex> column(u.col(col).data(), static_cast<std::size_t>(d));
        for (const Gate& g : c.gates()) detail::apply_gate_inplace(column, c.num_wires(), g);
    }
    return DenseOperator(std::move(u));
}

// ---------------------------------------------------------------------------
// Spectral functions
// ---------------------------------------------------------------------------

/// Eigendecomposition of a Hermitian operator, reusable for exp(-i h t) at many t.
class HermitianSpectrum {
public:
    explicit HermitianSpectrum(const DenseOperator& h) {
        if (!h.is_hermitian()) throw std::invalid_argument("tfd: operator is not Hermitian");
        const Matrix sym = 0.5 * (h.matrix() + h.matrix().adjoint());
        Eigen::SelfAdjointEigenSolver<Matrix> es(sym);
        if (es.info() != Eigen::Success) throw std::runtime_error("tfd: eigendecomposition failed");
        values_ = es.eigenvalues();
        vectors_ = es.eigenvectors();
    }

    [[nodiscard]] const Eigen::VectorXd& eigenvalues() const { return values_; }
    [[nodiscard]] const Matrix& eigenvectors() const { return vectors_; }

    /// exp(-i h t).
    [[nodiscard]] DenseOperator propagator(double t) const {
        using namespace std::complex_literals;
        const Vector phases = (-1i * t * values_.cast<Complex>()).array().exp().matrix();
        return DenseOperator(vectors_ * phases.asDiagonal() * vectors_.adjoint());
    }

private:
    Eigen::VectorXd values_;
    Matrix vectors_;
};

/// exp(g) for anti-Hermitian g, via the spectrum of the Hermitian matrix i*g.
inline DenseOperator unitary_from_generator(const DenseOperator& g) {
    using namespace std::complex_literals;
    if (!g.is_anti_hermitian()) throw std::invalid_argument("tfd: generator is not anti-Hermitian");
    return HermitianSpectrum(DenseOperator(1i * g.matrix())).propagator(1.0);
}

/// Re<psi|O|psi>; rejects non-Hermitian observables.
inline double expectation(const StateVector& state, const DenseOperator& obs) {
    if (obs.dim() != state.dim()) throw std::invalid_argument("tfd: observable/state dimension mismatch");
    if (!obs.is_hermitian()) throw std::invalid_argument("tfd: observable is not Hermitian");
    const Complex v = state.amplitudes().dot(obs.matrix() * state.amplitudes());
    if (std::abs(v.imag()) >= kAlgebraTolerance) {
        throw std::runtime_error("tfd: expectation value has a non-negligible imaginary part");
    }
    return v.real();
}

/// Reduced density matrix on `keep_wires`, in the order given.
inline DenseOperator partial_trace(const StateVector& state, std::span<const std::size_t> keep_wires) {
    const std::size_t n = state.num_wires();
    if (keep_wires.empty()) throw std::invalid_argument("tfd: partial_trace needs at least one kept wire");
    std::vector<bool> kept(n, false);
    for (std::size_t w : keep_wires) {
        if (w >= n) throw std::out_of_range("tfd: kept wire out of range");
        if (kept[w]) throw std::invalid_argument("tfd: kept wires must be distinct");
        kept[w] = true;
    }
    std::vector<std::size_t> traced;
    for (std::size_t w = 0; w < n; ++w) {
        if (!kept[w]) traced.push_back(w);
    }

    const std::size_t keep_dim = std::size_t{1} << keep_wires.size();
    const std::size_t rest_dim = std::size_t{1} << traced.size();
    auto full_index = [&](std::size_t k, std::size_t r) {
        std::size_t idx = 0;
        for (std::size_t j = 0; j < keep_wires.size(); ++j) {
            if ((k >> (keep_wires.size() - 1 - j)) & 1U) idx |= std::size_t{1} << (n - 1 - keep_wires[j]);
        }
        for (std::size_t j = 0; j < traced.size(); ++j) {
            if ((r >> (traced.size() - 1 - j)) & 1U) idx |= std::size_t{1} << (n - 1 - traced[j]);
        }
        return idx;
    };

    Matrix rho = Matrix::Zero(static_cast<Eigen::Index>(keep_dim), static_cast<Eigen::Index>(keep_dim));
    Vector slice(static_cast<Eigen::Index>(keep_dim));
    for (std::size_t r = 0; r < rest_dim; ++r) {
        for (std::size_t k = 0; k < keep_dim; ++k) slice(static_cast<Eigen::Index>(k)) = state[full_index(k, r)];
        rho.noalias() += slice * slice.adjoint();
    }
    return DenseOperator(std::move(rho));
}

inline DenseOperator partial_trace(const StateVector& state, std::initializer_list<std::size_t> keep_wires) {
    return partial_trace(state, std::span<const std::size_t>(keep_wires.begin(), keep_wires.size()));
}

/// Half the trace norm of (a - b); both must be Hermitian.
inline double trace_distance(const DenseOperator& a, const DenseOperator& b) {
    const HermitianSpectrum diff(a - b);
    return 0.5 * diff.eigenvalues().cwiseAbs().sum();
}

/// min over a phase picked from the largest-magnitude entry of V^dagger U of ||U - e^{i phi} V||_2.
inline double global_phase_distance(const DenseOperator& u, const DenseOperator& v) {
    if (u.dim() != v.dim()) throw std::invalid_argument("tfd: operator dimension mismatch");
    const Matrix overlap = v.matrix().adjoint() * u.matrix();
    Eigen::Index r = 0, c = 0;
    const double peak = overlap.cwiseAbs().maxCoeff(&r, &c);
    const Complex phase = peak > 0.0 ? overlap(r, c) / peak : Complex{1.0, 0.0};
    const Matrix diff = u.matrix() - phase * v.matrix();
    Eigen::JacobiSVD<Matrix> svd(diff);
    return svd.singularValues()(0);
}

// ---------------------------------------------------------------------------
// Shot sampling
// ---------------------------------------------------------------------------

enum class MeasurementBasis { X, Y, Z };

inline MeasurementBasis parse_basis(char c) {
    switch (c) {
        case 'X': case 'x': return MeasurementBasis::X;
        case 'Y': case 'y': return MeasurementBasis::Y;
        case 'Z': case 'z': return MeasurementBasis::Z;
        default: throw std::invalid_argument(std::string("tfd: unknown measurement basis '") + c + "'");
    }
}

struct ShotCounts {
    std::uint64_t plus = 0;
    std::uint64_t minus = 0;

    [[nodiscard]] std::uint64_t shots() const { return plus + minus; }
    [[nodiscard]] double mean() const {
        return (static_cast<double>(plus) - static_cast<double>(minus)) / static_cast<double>(shots());
    }
};

/// Folds a base seed and stream identifiers into one 64-bit seed (std::seed_seq is fully specified).
inline std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> stream = {}) {
    std::vector<std::uint32_t> words{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
    for (std::uint64_t s : stream) {
        words.push_back(static_cast<std::uint32_t>(s));
        words.push_back(static_cast<std::uint32_t>(s >> 32));
    }
    std::seed_seq seq(words.begin(), words.end());
    std::uint32_t out[2];
    seq.generate(std::begin(out), std::end(out));
    return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

/// Draws `shots` single-wire outcomes in the given Pauli basis.
///
/// The basis is rotated onto Z first (H for X, RX(pi/2) for Y), then each shot
/// compares a 53-bit uniform from mt19937_64 against P(wire = 0). The result
/// depends only on the state, wire, basis, shots and seed.
inline ShotCounts sample_shots(const StateVector& state, std::size_t wire, MeasurementBasis basis,
                               std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) throw std::invalid_argument("tfd: shots must be at least 1");
    if (wire >= state.num_wires()) throw std::out_of_range("tfd: measured wire out of range");

    StateVector rotated = state;
    switch (basis) {
        case MeasurementBasis::X: rotated = apply_gate(std::move(rotated), Gate::h(wire)); break;
        case MeasurementBasis::Y: rotated = apply_gate(std::move(rotated), Gate::rx(wire, std::numbers::pi / 2)); break;
        case MeasurementBasis::Z: break;
    }

    const std::size_t bit = std::size_t{1} << (state.num_wires() - 1 - wire);
    double p_plus = 0.0;
    for (std::size_t i = 0; i < rotated.dim(); ++i) {
        if (!(i & bit)) p_plus += std::norm(rotated[i]);
    }

    std::mt19937_64 rng(seed);
    ShotCounts counts;
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (u < p_plus) {
            ++counts.plus;
        } else {
            ++counts.minus;
        }
    }
    return counts;
}

}  // namespace tfd

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

// Symbolic fermionic ladder expressions and their Jordan-Wigner image.
//
// For an n-mode thermofield system there are 2n modes: physical mode i is
// mode i and its tilde partner is mode i + n. Mode j maps to wire j.
// Annihilator: a_j = Z_0 ... Z_{j-1} (X_j + i Y_j) / 2, so |0> is the vacuum.
// Creator:     a_j^dagger = Z_0 ... Z_{j-1} (X_j - i Y_j) / 2.

#pragma once

#include "tfd/pauli.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace tfd {

struct LadderOp {
    std::size_t mode;
    bool dagger;

    auto operator<=>(const LadderOp&) const = default;
};

struct FermiTerm {
    Complex coefficient;
    std::vector<LadderOp> factors;  // left-to-right operator product
};

class FermiSum {
public:
    explicit FermiSum(std::size_t total_modes) : total_modes_(total_modes) {}

    static FermiSum annihilate(std::size_t total_modes, std::size_t mode) {
        FermiSum s(total_modes);
        s.add(1.0, {{mode, false}});
        return s;
    }
    static FermiSum create(std::size_t total_modes, std::size_t mode) {
        FermiSum s(total_modes);
        s.add(1.0, {{mode, true}});
        return s;
    }

    FermiSum& add(Complex c, std::vector<LadderOp> factors) {
        for (const auto& f : factors) {
            if (f.mode >= total_modes_) throw std::out_of_range("tfd: fermionic mode index out of range");
        }
        terms_.push_back({c, std::move(factors)});
        return *this;
    }

    [[nodiscard]] std::size_t total_modes() const { return total_modes_; }
    [[nodiscard]] const std::vector<FermiTerm>& terms() const { return terms_; }

    /// Merges exact-duplicate factor sequences; drops zero coefficients.
    [[nodiscard]] FermiSum collect() const {
        std::map<std::vector<LadderOp>, Complex> merged;
        for (const auto& t : terms_) merged[t.factors] += t.coefficient;
        FermiSum out(total_modes_);
        for (auto& [factors, c] : merged) {
            if (std::abs(c) >= kCoefficientCutoff) out.add(c, factors);
        }
        return out;
    }

    friend FermiSum operator+(const FermiSum& a, const FermiSum& b) {
        require_same_modes(a, b);
        FermiSum out = a;
        for (const auto& t : b.terms_) out.add(t.coefficient, t.factors);
        return out;
    }
    friend FermiSum operator-(const FermiSum& a, const FermiSum& b) { return a + Complex{-1.0, 0.0} * b; }
    friend FermiSum operator*(Complex s, const FermiSum& a) {
        FermiSum out(a.total_modes_);
        for (const auto& t : a.terms_) out.add(s * t.coefficient, t.factors);
        return out;
    }
    friend FermiSum operator*(const FermiSum& a, const FermiSum& b) {
        require_same_modes(a, b);
        FermiSum out(a.total_modes_);
        for (const auto& ta : a.terms_) {
            for (const auto& tb : b.terms_) {
                std::vector<LadderOp> f = ta.factors;
                f.insert(f.end(), tb.factors.begin(), tb.factors.end());
                out.add(ta.coefficient * tb.coefficient, std::move(f));
            }
        }
        return out;
    }

private:
    static void require_same_modes(const FermiSum& a, const FermiSum& b) {
        if (a.total_modes_ != b.total_modes_) throw std::invalid_argument("tfd: Fermi sums over different mode counts");
    }

    std::size_t total_modes_;
    std::vector<FermiTerm> terms_;
};

/// `Omitted` drops the Z string; it exists only as a negative control.
enum class JwString { Standard, Omitted };

/// Qubit image of a single ladder operator.
inline PauliSum jw_ladder(std::size_t total_modes, LadderOp op, JwString string = JwString::Standard) {
    using namespace std::complex_literals;
    if (op.mode >= total_modes) throw std::out_of_range("tfd: fermionic mode index out of range");
    PauliWord z_string;
    if (string == JwString::Standard) {
        for (std::size_t w = 0; w < op.mode; ++w) z_string.set(w, Pauli::Z);
    }
    PauliWord with_x = z_string;
    with_x.set(op.mode, Pauli::X);
    PauliWord with_y = z_string;
    with_y.set(op.mode, Pauli::Y);

    PauliSum out(total_modes);
    out.add(0.5, std::move(with_x));
    out.add(op.dagger ? -0.5i : 0.5i, std::move(with_y));
    return out;
}

inline PauliSum jordan_wigner(const FermiSum& f, JwString string = JwString::Standard) {
    const std::size_t n = f.total_modes();
    PauliSum out(n);
    for (const auto& term : f.terms()) {
        PauliSum product = PauliSum::identity(n, term.coefficient);
        for (const auto& op : term.factors) product = collect_terms(product * jw_ladder(n, op, string));
        out = out + product;
    }
    return collect_terms(out);
}

/// Worst-case residuals of the canonical anticommutation relations at matrix level.
struct CarReport {
    std::size_t n_modes = 0;
    std::size_t num_wires = 0;
    double creation_residual = 0.0;       // max ||{a_i, a_j^dagger} - delta_ij I||
    double annihilation_residual = 0.0;   // max ||{a_i, a_j}||
    double cross_commutator = 0.0;        // max ||[a_i, a_j]||, ||[a_i, a_j^dagger]|| over i != j

    [[nodiscard]] double worst_anticommutator() const { return std::max(creation_residual, annihilation_residual); }
    [[nodiscard]] bool passed(double tol = 1e-12) const { return worst_anticommutator() < tol; }
};

/// Checks the CAR for the 2n JW-mapped modes of an n-mode thermofield system.
inline CarReport car_check(std::size_t n_modes, JwString string = JwString::Standard) {
    if (n_modes < 1 || n_modes > 3) throw std::invalid_argument("tfd: car_check supports 1 to 3 modes");
    const std::size_t total = 2 * n_modes;
    std::vector<Matrix> a, ad;
    for (std::size_t j = 0; j < total; ++j) {
        a.push_back(pauli_sum_to_matrix(jw_ladder(total, {j, false}, string)).matrix());
        ad.push_back(pauli_sum_to_matrix(jw_ladder(total, {j, true}, string)).matrix());
    }
    const auto d = a.front().rows();
    const Matrix id = Matrix::Identity(d, d);

    CarReport r;
    r.n_modes = n_modes;
    r.num_wires = total;
    for (std::size_t i = 0; i < total; ++i) {
        for (std::size_t j = 0; j < total; ++j) {
            const Matrix delta = (i == j) ? id : Matrix::Zero(d, d);
            r.creation_residual = std::max(r.creation_residual, max_abs(a[i] * ad[j] + ad[j] * a[i] - delta));
            r.annihilation_residual = std::max(r.annihilation_residual, max_abs(a[i] * a[j] + a[j] * a[i]));
            if (i != j) {
                r.cross_commutator = std::max(r.cross_commutator, max_abs(a[i] * a[j] - a[j] * a[i]));
                r.cross_commutator = std::max(r.cross_commutator, max_abs(a[i] * ad[j] - ad[j] * a[i]));
            }
        }
    }
    return r;
}

}  // namespace tfd

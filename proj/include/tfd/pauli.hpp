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

// Pauli strings with exact phase tracking.

#pragma once

#include "tfd/qstate.hpp"

#include <compare>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tfd {

enum class Pauli : std::uint8_t { X, Y, Z };

inline char pauli_char(Pauli p) {
    switch (p) {
        case Pauli::X: return 'X';
        case Pauli::Y: return 'Y';
        case Pauli::Z: return 'Z';
    }
    return '?';
}

/// Tensor product of Pauli letters; wires not listed carry the identity.
class PauliWord {
public:
    PauliWord() = default;
    PauliWord(std::initializer_list<std::pair<std::size_t, Pauli>> letters) {
        for (auto [w, p] : letters) set(w, p);
    }

    static PauliWord single(std::size_t wire, Pauli p) { return PauliWord{{wire, p}}; }

    void set(std::size_t wire, Pauli p) { letters_[wire] = p; }
    void clear(std::size_t wire) { letters_.erase(wire); }

    [[nodiscard]] std::optional<Pauli> at(std::size_t wire) const {
        const auto it = letters_.find(wire);
        if (it == letters_.end()) return std::nullopt;
        return it->second;
    }
    [[nodiscard]] const std::map<std::size_t, Pauli>& letters() const { return letters_; }
    [[nodiscard]] bool is_identity() const { return letters_.empty(); }
    [[nodiscard]] std::size_t weight() const { return letters_.size(); }
    /// One past the highest non-identity wire (0 for the identity).
    [[nodiscard]] std::size_t span() const { return letters_.empty() ? 0 : letters_.rbegin()->first + 1; }

    [[nodiscard]] std::string to_string() const {
        if (letters_.empty()) return "I";
        std::string s;
        for (auto [w, p] : letters_) {
            if (!s.empty()) s += ' ';
            s += pauli_char(p);
            s += std::to_string(w);
        }
        return s;
    }

    auto operator<=>(const PauliWord&) const = default;
    bool operator==(const PauliWord&) const = default;

private:
    std::map<std::size_t, Pauli> letters_;
};

struct PhasedWord {
    Complex phase;
    PauliWord word;
};

namespace detail {

// Phase exponent k (phase = i^k) and result letter for a single-wire product.
// Result nullopt means identity.
inline std::pair<int, std::optional<Pauli>> letter_product(Pauli a, Pauli b) {
    if (a == b) return {0, std::nullopt};
    const int ia = static_cast<int>(a);
    const int ib = static_cast<int>(b);
    const auto third = static_cast<Pauli>(3 - ia - ib);
    // Cyclic X->Y->Z gives +i, anti-cyclic gives -i.
    const bool cyclic = (ib - ia + 3) % 3 == 1;
    return {cyclic ? 1 : 3, third};
}

inline Complex i_power(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

}  // namespace detail

/// w1 * w2 = phase * word, with phase in {1, i, -1, -i}.
inline PhasedWord pauli_multiply(const PauliWord& w1, const PauliWord& w2) {
    PauliWord out = w1;
    int k = 0;
    for (auto [wire, p] : w2.letters()) {
        const auto existing = out.at(wire);
        if (!existing) {
            out.set(wire, p);
            continue;
        }
        const auto [dk, letter] = detail::letter_product(*existing, p);
        k += dk;
        if (letter) {
            out.set(wire, *letter);
        } else {
            out.clear(wire);
        }
    }
    return {detail::i_power(k), std::move(out)};
}

struct PauliTerm {
    Complex coefficient;
    PauliWord word;
};

/// Complex-weighted sum of Pauli words on a fixed register.
class PauliSum {
public:
    explicit PauliSum(std::size_t num_wires) : num_wires_(num_wires) {}

    static PauliSum identity(std::size_t num_wires, Complex c = 1.0) {
        PauliSum s(num_wires);
        s.add(c, PauliWord{});
        return s;
    }

    PauliSum& add(Complex c, PauliWord w) {
        if (w.span() > num_wires_) throw std::out_of_range("tfd: Pauli word exceeds the register");
        terms_.push_back({c, std::move(w)});
        return *this;
    }

    [[nodiscard]] std::size_t num_wires() const { return num_wires_; }
    [[nodiscard]] const std::vector<PauliTerm>& terms() const { return terms_; }
    [[nodiscard]] bool empty() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }

    /// Words are Hermitian, so the adjoint conjugates the coefficients.
    [[nodiscard]] PauliSum adjoint() const {
        PauliSum out(num_wires_);
        for (const auto& t : terms_) out.add(std::conj(t.coefficient), t.word);
        return out;
    }

    friend PauliSum operator+(const PauliSum& a, const PauliSum& b) {
        require_same_register(a, b);
        PauliSum out = a;
        for (const auto& t : b.terms_) out.add(t.coefficient, t.word);
        return out;
    }
    friend PauliSum operator-(const PauliSum& a, const PauliSum& b) { return a + Complex{-1.0, 0.0} * b; }
    friend PauliSum operator*(Complex s, const PauliSum& a) {
        PauliSum out(a.num_wires_);
        for (const auto& t : a.terms_) out.add(s * t.coefficient, t.word);
        return out;
    }
    /// Operator product, expanded term by term (not collected).
    friend PauliSum operator*(const PauliSum& a, const PauliSum& b) {
        require_same_register(a, b);
        PauliSum out(a.num_wires_);
        for (const auto& ta : a.terms_) {
            for (const auto& tb : b.terms_) {
                auto [phase, word] = pauli_multiply(ta.word, tb.word);
                out.add(phase * ta.coefficient * tb.coefficient, std::move(word));
            }
        }
        return out;
    }

    [[nodiscard]] std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        char buf[64];
        for (const auto& t : terms_) {
            std::snprintf(buf, sizeof buf, "(%.6g%+.6gi)", t.coefficient.real(), t.coefficient.imag());
            if (!s.empty()) s += " + ";
            s += buf;
            s += ' ';
            s += t.word.to_string();
        }
        return s;
    }

private:
    static void require_same_register(const PauliSum& a, const PauliSum& b) {
        if (a.num_wires_ != b.num_wires_) throw std::invalid_argument("tfd: Pauli sums on different registers");
    }

    std::size_t num_wires_;
    std::vector<PauliTerm> terms_;
};

inline constexpr double kCoefficientCutoff = 1e-14;

/// Merges equal words, drops |c| < 1e-14, orders by word. Idempotent.
inline PauliSum collect_terms(const PauliSum& p) {
    std::map<PauliWord, Complex> merged;
    for (const auto& t : p.terms()) merged[t.word] += t.coefficient;
    PauliSum out(p.num_wires());
    for (auto& [word, c] : merged) {
        if (std::abs(c) >= kCoefficientCutoff) out.add(c, word);
    }
    return out;
}

/// Dense image of a Pauli sum. Each word is a signed permutation, so every
/// term costs O(2^n) rather than a chain of Kronecker products.
inline DenseOperator pauli_sum_to_matrix(const PauliSum& p) {
    using namespace std::complex_literals;
    const std::size_t n = p.num_wires();
    const std::size_t dim = dim_for_wires(n);
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (const auto& t : p.terms()) {
        std::size_t flip = 0;
        for (auto [w, letter] : t.word.letters()) {
            if (letter != Pauli::Z) flip |= std::size_t{1} << (n - 1 - w);
        }
        for (std::size_t col = 0; col < dim; ++col) {
            Complex phase = t.coefficient;
            for (auto [w, letter] : t.word.letters()) {
                const bool one = (col >> (n - 1 - w)) & 1U;
                if (letter == Pauli::Z && one) phase = -phase;
                if (letter == Pauli::Y) phase *= one ? -1i : 1i;
            }
            m(static_cast<Eigen::Index>(col ^ flip), static_cast<Eigen::Index>(col)) += phase;
        }
    }
    return DenseOperator(std::move(m));
}

enum class Hermiticity { Hermitian, AntiHermitian, Neither };

inline const char* hermiticity_name(Hermiticity h) {
    switch (h) {
        case Hermiticity::Hermitian: return "hermitian";
        case Hermiticity::AntiHermitian: return "anti_hermitian";
        case Hermiticity::Neither: return "neither";
    }
    return "?";
}

/// Compares the sum with its adjoint term by term. The zero sum counts as Hermitian.
inline Hermiticity hermiticity_classify(const PauliSum& p, double tol = 1e-12) {
    const PauliSum canon = collect_terms(p);
    bool real = true;
    bool imaginary = true;
    for (const auto& t : canon.terms()) {
        if (std::abs(t.coefficient.imag()) > tol) real = false;
        if (std::abs(t.coefficient.real()) > tol) imaginary = false;
    }
    if (real) return Hermiticity::Hermitian;
    if (imaginary) return Hermiticity::AntiHermitian;
    return Hermiticity::Neither;
}

}  // namespace tfd

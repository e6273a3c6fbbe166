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

#include "tfd/fermion.hpp"
#include "tfd/pauli.hpp"

#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace tfd;
using namespace std::complex_literals;
using tfd_test::Rng;

namespace {

Complex coefficient_of(const PauliSum& p, const PauliWord& w) {
    Complex c = 0.0;
    for (const auto& t : p.terms()) {
        if (t.word == w) c += t.coefficient;
    }
    return c;
}

// Kronecker-product route to a word's matrix, independent of pauli_sum_to_matrix.
Matrix word_matrix_kron(const PauliWord& w, std::size_t n) {
    Matrix out = Matrix::Identity(1, 1);
    for (std::size_t k = 0; k < n; ++k) {
        Matrix m(2, 2);
        const auto letter = w.at(k);
        if (!letter) {
            m << 1, 0, 0, 1;
        } else if (*letter == Pauli::X) {
            m << 0, 1, 1, 0;
        } else if (*letter == Pauli::Y) {
            m << 0, -1i, 1i, 0;
        } else {
            m << 1, 0, 0, -1;
        }
        out = kron(DenseOperator(out), DenseOperator(m)).matrix();
    }
    return out;
}

PauliWord random_word(Rng& rng, std::size_t n) {
    PauliWord w;
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t l = rng.index(4);
        if (l < 3) w.set(k, static_cast<Pauli>(l));
    }
    return w;
}

FermiSum random_fermi_sum(Rng& rng, std::size_t total_modes) {
    FermiSum f(total_modes);
    const std::size_t terms = 1 + rng.index(3);
    for (std::size_t t = 0; t < terms; ++t) {
        std::vector<LadderOp> ops;
        const std::size_t len = 1 + rng.index(3);
        for (std::size_t k = 0; k < len; ++k) ops.push_back({rng.index(total_modes), rng.index(2) == 1});
        f.add(Complex(rng.uniform(-1, 1), rng.uniform(-1, 1)), ops);
    }
    return f;
}

}  // namespace

// --- pauli_multiply ---------------------------------------------------------

TEST(PauliMultiply, XTimesYIsIZ) {
    const auto r = pauli_multiply(PauliWord::single(0, Pauli::X), PauliWord::single(0, Pauli::Y));
    EXPECT_EQ(r.phase, Complex(0, 1));
    EXPECT_EQ(r.word, PauliWord::single(0, Pauli::Z));
}

TEST(PauliMultiply, ZXAnticommutesWithXZ) {
    const auto zx = pauli_multiply(PauliWord::single(0, Pauli::Z), PauliWord::single(0, Pauli::X));
    const auto xz = pauli_multiply(PauliWord::single(0, Pauli::X), PauliWord::single(0, Pauli::Z));
    EXPECT_EQ(zx.phase, Complex(0, 1));
    EXPECT_EQ(xz.phase, Complex(0, -1));
    EXPECT_EQ(zx.word, PauliWord::single(0, Pauli::Y));
    EXPECT_EQ(xz.word, PauliWord::single(0, Pauli::Y));
}

TEST(PauliMultiply, InvolutionOfTwoWireWord) {
    const PauliWord xz{{0, Pauli::X}, {1, Pauli::Z}};
    const auto r = pauli_multiply(xz, xz);
    EXPECT_EQ(r.phase, Complex(1, 0));
    EXPECT_TRUE(r.word.is_identity());
}

TEST(PauliMultiply, AssociativeAndAdjointReversing) {
    Rng rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng.index(4);
        const PauliWord a = random_word(rng, n), b = random_word(rng, n), c = random_word(rng, n);
        const auto ab = pauli_multiply(a, b);
        const auto ab_c = pauli_multiply(ab.word, c);
        const auto bc = pauli_multiply(b, c);
        const auto a_bc = pauli_multiply(a, bc.word);
        EXPECT_EQ(ab_c.word, a_bc.word);
        EXPECT_LT(std::abs(ab.phase * ab_c.phase - bc.phase * a_bc.phase), 1e-15);

        // (ab)^dagger = b^dagger a^dagger; words are Hermitian so this is conj(phase) word = b a.
        const auto ba = pauli_multiply(b, a);
        EXPECT_EQ(ba.word, ab.word);
        EXPECT_LT(std::abs(std::conj(ab.phase) - ba.phase), 1e-15);

        // Phase tracking agrees with dense multiplication.
        const Matrix lhs = word_matrix_kron(a, n) * word_matrix_kron(b, n);
        EXPECT_LT(max_abs(lhs - ab.phase * word_matrix_kron(ab.word, n)), 1e-15);
    }
}

// --- pauli_sum_to_matrix ------------------------------------------------------

TEST(PauliSumToMatrix, EmptySumIsZero) {
    EXPECT_LT(max_abs(pauli_sum_to_matrix(PauliSum(2)).matrix()), 1e-300);
}

TEST(PauliSumToMatrix, SingleZ) {
    PauliSum p(1);
    p.add(1.0, PauliWord::single(0, Pauli::Z));
    Matrix z(2, 2);
    z << 1, 0, 0, -1;
    EXPECT_LT(max_abs(pauli_sum_to_matrix(p).matrix() - z), 1e-15);
}

TEST(PauliSumToMatrix, SpinGeneratorMapsVacuumToThermalPair) {
    const double theta = std::numbers::pi / 4;
    PauliSum g(2);
    g.add(-0.5i * theta, PauliWord{{0, Pauli::X}, {1, Pauli::X}});
    g.add(0.5i * theta, PauliWord{{0, Pauli::Y}, {1, Pauli::Y}});
    const StateVector s = apply_unitary(StateVector(2), unitary_from_generator(pauli_sum_to_matrix(g)));
    EXPECT_NEAR(std::abs(s[0] - 1.0 / std::numbers::sqrt2), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(s[3] + 1i / std::numbers::sqrt2), 0.0, 1e-12);
}

TEST(PauliSumToMatrix, AgreesWithKroneckerRouteAndIsLinear) {
    Rng rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + rng.index(5);
        PauliSum p(n);
        Matrix expected = Matrix::Zero(1 << n, 1 << n);
        for (int k = 0; k < 6; ++k) {
            const PauliWord w = random_word(rng, n);
            const Complex c(rng.uniform(-1, 1), rng.uniform(-1, 1));
            p.add(c, w);
            expected += c * word_matrix_kron(w, n);
        }
        EXPECT_LT(max_abs(pauli_sum_to_matrix(p).matrix() - expected), 1e-14);
    }
}

TEST(PauliSumToMatrix, RejectsOversizedRegister) {
    EXPECT_THROW(pauli_sum_to_matrix(PauliSum(kMaxWires + 1)), std::length_error);
}

// --- collect_terms ------------------------------------------------------------

TEST(CollectTerms, MergesAndCancels) {
    const PauliWord x = PauliWord::single(0, Pauli::X);
    PauliSum twice(1);
    twice.add(1.0, x).add(1.0, x);
    const PauliSum merged = collect_terms(twice);
    ASSERT_EQ(merged.size(), 1u);
    EXPECT_EQ(merged.terms()[0].coefficient, Complex(2.0));

    PauliSum cancel(1);
    cancel.add(1.0, x).add(-1.0, x);
    EXPECT_TRUE(collect_terms(cancel).empty());
}

TEST(CollectTerms, PairCreationMinusAnnihilationCollapsesToXXAndYY) {
    const FermiSum f = FermiSum::create(2, 0) * FermiSum::create(2, 1) - FermiSum::annihilate(2, 0) * FermiSum::annihilate(2, 1);
    // Raw expansion: each ladder product is 2 x 2 words, so 8 uncollected terms.
    PauliSum raw(2);
    for (const auto& term : f.terms()) {
        PauliSum prod = PauliSum::identity(2, term.coefficient);
        for (const auto& op : term.factors) prod = prod * jw_ladder(2, op);
        raw = raw + prod;
    }
    EXPECT_EQ(raw.size(), 8u);
    const PauliSum c = collect_terms(raw);
    ASSERT_EQ(c.size(), 2u);
    EXPECT_LT(std::abs(coefficient_of(c, PauliWord{{0, Pauli::X}, {1, Pauli::X}}) - 0.5), 1e-15);
    EXPECT_LT(std::abs(coefficient_of(c, PauliWord{{0, Pauli::Y}, {1, Pauli::Y}}) + 0.5), 1e-15);
}

TEST(CollectTerms, IdempotentAndMatrixPreserving) {
    Rng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + rng.index(4);
        PauliSum p(n);
        for (int k = 0; k < 12; ++k) p.add(Complex(rng.uniform(-1, 1), rng.uniform(-1, 1)), random_word(rng, n));
        const PauliSum once = collect_terms(p);
        const PauliSum twice = collect_terms(once);
        ASSERT_EQ(once.size(), twice.size());
        for (std::size_t k = 0; k < once.size(); ++k) {
            EXPECT_EQ(once.terms()[k].word, twice.terms()[k].word);
            EXPECT_EQ(once.terms()[k].coefficient, twice.terms()[k].coefficient);
            if (k > 0) {
                EXPECT_LT(once.terms()[k - 1].word, once.terms()[k].word);
            }
        }
        EXPECT_LT(max_abs(pauli_sum_to_matrix(p).matrix() - pauli_sum_to_matrix(once).matrix()), 1e-14);
    }
}

// --- hermiticity_classify -----------------------------------------------------

TEST(HermiticityClassify, BasicCases) {
    PauliSum h(1);
    h.add(1.0, PauliWord::single(0, Pauli::X)).add(1.0, PauliWord::single(0, Pauli::Y));
    EXPECT_EQ(hermiticity_classify(h), Hermiticity::Hermitian);

    PauliSum a(1);
    a.add(1i, PauliWord::single(0, Pauli::X));
    EXPECT_EQ(hermiticity_classify(a), Hermiticity::AntiHermitian);

    PauliSum mixed(1);
    mixed.add(1.0, PauliWord::single(0, Pauli::X)).add(1i, PauliWord::single(0, Pauli::Z));
    EXPECT_EQ(hermiticity_classify(mixed), Hermiticity::Neither);
}

TEST(HermiticityClassify, JordanWignerImageOfBogoliubovGeneratorIsHermitian) {
    const double theta = 0.4;
    const FermiSum g = Complex(theta) * (FermiSum::create(2, 0) * FermiSum::create(2, 1) -
                                         FermiSum::annihilate(2, 0) * FermiSum::annihilate(2, 1));
    const PauliSum image = jordan_wigner(g);
    EXPECT_EQ(hermiticity_classify(image), Hermiticity::Hermitian);
    EXPECT_TRUE(pauli_sum_to_matrix(image).is_hermitian(1e-15));
}

// --- jordan_wigner ------------------------------------------------------------

TEST(JordanWigner, SingleModeAnnihilator) {
    const PauliSum a = jordan_wigner(FermiSum::annihilate(1, 0));
    ASSERT_EQ(a.size(), 2u);
    EXPECT_EQ(coefficient_of(a, PauliWord::single(0, Pauli::X)), Complex(0.5));
    EXPECT_EQ(coefficient_of(a, PauliWord::single(0, Pauli::Y)), Complex(0, 0.5));
    // |0> is the vacuum: a|0> = 0, a|1> = |0>.
    const Matrix m = pauli_sum_to_matrix(a).matrix();
    EXPECT_LT(std::abs(m(1, 0)) + std::abs(m(0, 0)), 1e-15);
    EXPECT_LT(std::abs(m(0, 1) - 1.0), 1e-15);
}

TEST(JordanWigner, TildeAnnihilatorCarriesZOnPhysicalWire) {
    const PauliSum at = jordan_wigner(FermiSum::annihilate(2, 1));
    ASSERT_EQ(at.size(), 2u);
    EXPECT_EQ(coefficient_of(at, PauliWord{{0, Pauli::Z}, {1, Pauli::X}}), Complex(0.5));
    EXPECT_EQ(coefficient_of(at, PauliWord{{0, Pauli::Z}, {1, Pauli::Y}}), Complex(0, 0.5));
}

TEST(JordanWigner, NumberOperator) {
    const PauliSum n = jordan_wigner(FermiSum::create(1, 0) * FermiSum::annihilate(1, 0));
    ASSERT_EQ(n.size(), 2u);
    EXPECT_LT(std::abs(coefficient_of(n, PauliWord{}) - 0.5), 1e-15);
    EXPECT_LT(std::abs(coefficient_of(n, PauliWord::single(0, Pauli::Z)) + 0.5), 1e-15);
}

TEST(JordanWigner, RejectsOutOfRangeMode) {
    FermiSum f(2);
    EXPECT_THROW(f.add(1.0, {{2, false}}), std::out_of_range);
    EXPECT_THROW(jw_ladder(2, {3, true}), std::out_of_range);
}

TEST(JordanWigner, HomomorphismAtMatrixLevel) {
    Rng rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t total = 2 * (1 + rng.index(2));  // n <= 2 modes, doubled
        const FermiSum f = random_fermi_sum(rng, total);
        const FermiSum g = random_fermi_sum(rng, total);
        const Matrix lhs = pauli_sum_to_matrix(jordan_wigner(f * g)).matrix();
        const Matrix rhs = pauli_sum_to_matrix(jordan_wigner(f)).matrix() * pauli_sum_to_matrix(jordan_wigner(g)).matrix();
        EXPECT_LT(max_abs(lhs - rhs), 1e-12);
    }
}

TEST(FermiSum, CollectMergesExactDuplicates) {
    FermiSum f(2);
    f.add(1.0, {{0, true}, {1, false}}).add(2.0, {{0, true}, {1, false}}).add(1.0, {{1, false}, {0, true}});
    const FermiSum c = f.collect();
    ASSERT_EQ(c.terms().size(), 2u);  // reordered factors are a different sequence
}

// --- car_check ----------------------------------------------------------------

TEST(CarCheck, PassesForOneToThreeModes) {
    for (std::size_t n = 1; n <= 3; ++n) {
        const CarReport r = car_check(n);
        EXPECT_EQ(r.num_wires, 2 * n);
        EXPECT_TRUE(r.passed()) << "n=" << n << " residual " << r.worst_anticommutator();
        EXPECT_LT(r.worst_anticommutator(), 1e-12);
    }
}

TEST(CarCheck, SingleModeRelations) {
    const Matrix a = pauli_sum_to_matrix(jw_ladder(2, {0, false})).matrix();
    const Matrix ad = pauli_sum_to_matrix(jw_ladder(2, {0, true})).matrix();
    const Matrix at = pauli_sum_to_matrix(jw_ladder(2, {1, false})).matrix();
    EXPECT_LT(max_abs(a * ad + ad * a - Matrix::Identity(4, 4)), 1e-15);
    EXPECT_LT(max_abs(a * at + at * a), 1e-15);
}

TEST(CarCheck, RemovingTheStringTurnsAnticommutatorsIntoCommutators) {
    const CarReport r = car_check(1, JwString::Omitted);
    EXPECT_FALSE(r.passed());
    EXPECT_GT(r.worst_anticommutator(), 0.5);
    EXPECT_LT(r.cross_commutator, 1e-15);
}

TEST(CarCheck, RejectsOutOfRange) {
    EXPECT_THROW(car_check(0), std::invalid_argument);
    EXPECT_THROW(car_check(4), std::invalid_argument);
}

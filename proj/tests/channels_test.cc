// Copyright 2026 The chandisc Authors
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


#include "chandisc/channels.h"

#include <cmath>
#include <functional>

#include "chandisc/error.h"
#include "chandisc/oracle.h"
#include "gtest/gtest.h"
#include "test_util.h"

using namespace chandisc;
using namespace chandisc::testing;

namespace {

void expect_affine(const AffineChannel &a, const RealMatrix3 &m, const Vec3 &c, double tol) {
    for (size_t k = 0; k < 9; k++) {
        EXPECT_NEAR(a.m().a[k], m.a[k], tol) << "m entry " << k;
    }
    for (size_t k = 0; k < 3; k++) {
        EXPECT_NEAR(a.c()[k], c[k], tol) << "c entry " << k;
    }
}

ErrorKind kind_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::UnknownName;
}

}  // namespace

TEST(channels, bloch_to_density_examples) {
    auto north = bloch_to_density(BlochVector({0, 0, 1}));
    ASSERT_LT(north.matrix().max_abs_diff(ComplexMatrix{{1, 0}, {0, 0}}), 1e-15);
    auto mixed = bloch_to_density(BlochVector({0, 0, 0}));
    ASSERT_LT(mixed.matrix().max_abs_diff(ComplexMatrix{{0.5, 0}, {0, 0.5}}), 1e-15);
    // (I + X) / 2 expanded by hand.
    auto plus = bloch_to_density(BlochVector({1, 0, 0}));
    ASSERT_LT(plus.matrix().max_abs_diff(ComplexMatrix{{0.5, 0.5}, {0.5, 0.5}}), 1e-15);
}

TEST(channels, bloch_to_density_purity) {
    CounterRng rng(21, 0);
    for (int trial = 0; trial < 100; trial++) {
        Vec3 r = random_unit(rng);
        auto eig = hermitian_eig(bloch_to_density(BlochVector(r)).matrix());
        ASSERT_NEAR(eig.eigenvalues[1], 0, 1e-9);
        auto inside = hermitian_eig(bloch_to_density(BlochVector(0.7 * r)).matrix());
        ASSERT_GT(inside.eigenvalues[1], 0.1);
    }
}

TEST(channels, bloch_vector_rejects_outside_ball) {
    ASSERT_NO_THROW(BlochVector({0, 0, 1 + 1e-13}));
    ASSERT_THROW(BlochVector({0, 0, 1.001}), Error);
}

TEST(channels, density_to_bloch_examples) {
    auto r0 = density_to_bloch(DensityMatrix(ComplexMatrix{{0.5, 0}, {0, 0.5}})).r();
    ASSERT_EQ(r0, (Vec3{0, 0, 0}));
    auto south = density_to_bloch(DensityMatrix(ComplexMatrix{{0, 0}, {0, 1}})).r();
    ASSERT_NEAR(south[2], -1, 1e-15);
    // (I + 0.6 X + 0.8 Z) / 2, traced against each Pauli directly.
    ComplexMatrix rho{{0.9, 0.3}, {0.3, 0.1}};
    const auto &p = pauli_matrices();
    for (size_t k = 0; k < 3; k++) {
        double direct = (p[k + 1] * rho).trace().real();
        ASSERT_NEAR(direct, (Vec3{0.6, 0, 0.8})[k], 1e-15);
    }
    auto r = density_to_bloch(DensityMatrix(rho)).r();
    ASSERT_NEAR(r[0], 0.6, 1e-15);
    ASSERT_NEAR(r[1], 0, 1e-15);
    ASSERT_NEAR(r[2], 0.8, 1e-15);
}

TEST(channels, density_to_bloch_rejects_other_dimensions) {
    auto id4 = ComplexMatrix::identity(4);
    auto rho = DensityMatrix(complex{0.25} * id4);
    ASSERT_EQ(kind_of([&] { density_to_bloch(rho); }), ErrorKind::DimensionMismatch);
}

TEST(channels, density_matrix_validation) {
    ASSERT_THROW(DensityMatrix(ComplexMatrix{{1, 0}, {0, 1}}), Error);
    ASSERT_THROW(DensityMatrix(ComplexMatrix{{1.5, 0}, {0, -0.5}}), Error);
    ASSERT_EQ(kind_of([] { DensityMatrix(ComplexMatrix{{0.5, 1}, {0, 0.5}}); }), ErrorKind::NotHermitian);
}

TEST(channels, bloch_round_trip) {
    CounterRng rng(22, 0);
    for (int trial = 0; trial < 1000; trial++) {
        Vec3 r = rng.uniform() * random_unit(rng);
        auto back = density_to_bloch(bloch_to_density(BlochVector(r))).r();
        ASSERT_LT(norm(back - r), 1e-12);
    }
}

TEST(channels, kraus_validation) {
    ASSERT_EQ(kind_of([] { KrausChannel({ComplexMatrix{{1, 0}, {0, 0.5}}}); }), ErrorKind::InvalidChannel);
    ASSERT_EQ(kind_of([] { KrausChannel({ComplexMatrix::identity(2), ComplexMatrix::identity(3)}); }),
              ErrorKind::DimensionMismatch);
    ASSERT_THROW(KrausChannel({}), Error);
}

TEST(channels, kraus_to_affine_examples) {
    expect_affine(kraus_to_affine(KrausChannel({ComplexMatrix::identity(2)})), RealMatrix3::identity(), {0, 0, 0},
                  1e-15);

    KrausChannel x_conj({pauli_matrices()[1]});
    expect_affine(kraus_to_affine(x_conj), RealMatrix3::diag(1, -1, -1), {0, 0, 0}, 1e-15);
    for (const auto &r : fibonacci_sphere(50)) {
        ASSERT_LT(norm(evolve_bloch_directly(x_conj, r) - Vec3{r[0], -r[1], -r[2]}), 1e-15);
    }

    for (double lambda : {0.0, 0.2, 0.36, 0.9, 1.0}) {
        double s = std::sqrt(1 - lambda);
        expect_affine(kraus_to_affine(named_channel("amplitude_damping", lambda)), RealMatrix3::diag(s, s, 1 - lambda),
                      {0, 0, lambda}, 1e-12);
    }
}

TEST(channels, kraus_to_affine_rejects_qutrits) {
    auto ch = KrausChannel({ComplexMatrix::identity(3)});
    ASSERT_EQ(kind_of([&] { kraus_to_affine(ch); }), ErrorKind::DimensionMismatch);
}

TEST(channels, named_channel_table) {
    const std::vector<double> params{0.0, 0.25, 0.5, 0.81, 1.0};
    for (double p : params) {
        double f = 2 * p - 1;
        double s = std::sqrt(1 - p);
        expect_affine(kraus_to_affine(named_channel("bit_flip", p)), RealMatrix3::diag(1, f, f), {0, 0, 0}, 1e-12);
        expect_affine(kraus_to_affine(named_channel("phase_flip", p)), RealMatrix3::diag(f, f, 1), {0, 0, 0}, 1e-12);
        expect_affine(kraus_to_affine(named_channel("bit_phase_flip", p)), RealMatrix3::diag(f, 1, f), {0, 0, 0},
                      1e-12);
        expect_affine(kraus_to_affine(named_channel("depolarizing", p)), RealMatrix3::diag(1 - p, 1 - p, 1 - p),
                      {0, 0, 0}, 1e-12);
        expect_affine(kraus_to_affine(named_channel("phase_damping", p)), RealMatrix3::diag(s, s, 1), {0, 0, 0},
                      1e-12);
        expect_affine(kraus_to_affine(named_channel("amplitude_damping", p)), RealMatrix3::diag(s, s, 1 - p),
                      {0, 0, p}, 1e-12);
    }
}

TEST(channels, named_channel_examples) {
    expect_affine(kraus_to_affine(named_channel("bit_flip", 1)), RealMatrix3::identity(), {0, 0, 0}, 1e-15);
    expect_affine(kraus_to_affine(named_channel("depolarizing", 0)), RealMatrix3::identity(), {0, 0, 0}, 1e-15);
    expect_affine(kraus_to_affine(named_channel("phase_damping", 1)), RealMatrix3::diag(0, 0, 1), {0, 0, 0}, 1e-15);
}

TEST(channels, named_channel_errors) {
    ASSERT_EQ(kind_of([] { named_channel("bit_flop", 0.5); }), ErrorKind::UnknownName);
    ASSERT_EQ(kind_of([] { named_channel("depolarizing", 1.5); }), ErrorKind::ParamOutOfRange);
    ASSERT_EQ(kind_of([] { named_channel("depolarizing", -0.1); }), ErrorKind::ParamOutOfRange);
    ASSERT_EQ(kind_of([] { named_channel("depolarizing", std::nan("")); }), ErrorKind::ParamOutOfRange);
    for (auto n : {NamedChannel::BitFlip, NamedChannel::PhaseFlip, NamedChannel::BitPhaseFlip,
                   NamedChannel::Depolarizing, NamedChannel::PhaseDamping, NamedChannel::AmplitudeDamping}) {
        ASSERT_EQ(parse_channel_name(channel_name(n)), n);
    }
}

TEST(channels, kraus_and_affine_evolution_agree) {
    const std::vector<std::string> names{"bit_flip",      "phase_flip",    "bit_phase_flip",
                                         "depolarizing", "phase_damping", "amplitude_damping"};
    auto inputs = fibonacci_sphere(200);
    for (const auto &name : names) {
        for (double p : {0.1, 0.5, 0.77}) {
            auto ch = named_channel(name, p);
            auto aff = kraus_to_affine(ch);
            for (const auto &r : inputs) {
                auto rho = bloch_to_density(BlochVector(r));
                auto direct = density_to_bloch(DensityMatrix(ch.apply(rho.matrix()))).r();
                ASSERT_LT(norm(direct - aff.apply(r)), 1e-9) << name << " " << p;
            }
        }
    }
    CounterRng rng(23, 0);
    for (int trial = 0; trial < 20; trial++) {
        auto ch = random_kraus_channel(2, 1 + trial % 4, rng);
        auto aff = kraus_to_affine(ch);
        for (const auto &r : inputs) {
            ASSERT_LT(norm(evolve_bloch_directly(ch, r) - aff.apply(r)), 1e-9);
        }
    }
}

TEST(channels, affine_channel_ball_check) {
    ASSERT_NO_THROW(AffineChannel(RealMatrix3::diag(0.5, 0.5, 0.5), {0, 0, 0.5}));
    ASSERT_EQ(kind_of([] { AffineChannel(RealMatrix3::diag(0.5, 0.5, 0.5), {0, 0, 0.6}); }),
              ErrorKind::InvalidChannel);
    ASSERT_THROW(AffineChannel(RealMatrix3::diag(1.1, 1, 1), {0, 0, 0}), Error);
}

TEST(channels, pauli_to_affine_examples) {
    expect_affine(pauli_to_affine(GpcChannel::pauli({1, 0, 0, 0})), RealMatrix3::identity(), {0, 0, 0}, 1e-15);
    auto z = GpcChannel::pauli({0, 0, 0, 1});
    expect_affine(pauli_to_affine(z), RealMatrix3::diag(-1, -1, 1), {0, 0, 0}, 1e-15);
    expect_affine(kraus_to_affine(z.to_kraus()), RealMatrix3::diag(-1, -1, 1), {0, 0, 0}, 1e-15);
    expect_affine(pauli_to_affine(GpcChannel::pauli({0.25, 0.25, 0.25, 0.25})), RealMatrix3::diag(0, 0, 0),
                  {0, 0, 0}, 1e-15);
}

TEST(channels, pauli_to_affine_matches_kraus) {
    CounterRng rng(24, 0);
    for (int trial = 0; trial < 500; trial++) {
        auto g = GpcChannel::pauli(random_pauli(rng));
        auto a = pauli_to_affine(g);
        auto b = kraus_to_affine(g.to_kraus());
        expect_affine(a, b.m(), b.c(), 1e-12);
    }
}

TEST(channels, pauli_to_affine_errors) {
    auto weyl2 = GpcChannel::weyl(2, {0.5, 0.5, 0, 0});
    ASSERT_EQ(kind_of([&] { pauli_to_affine(weyl2); }), ErrorKind::BasisNotPauli);
    std::vector<double> q(9, 1.0 / 9);
    auto weyl3 = GpcChannel::weyl(3, q);
    ASSERT_EQ(kind_of([&] { pauli_to_affine(weyl3); }), ErrorKind::DimensionMismatch);
}

TEST(channels, gpc_basis_qubit) {
    auto b = gpc_basis(2);
    ASSERT_EQ(b.size(), 4);
    const auto &p = pauli_matrices();
    ASSERT_LT(b[0].max_abs_diff(p[0]), 1e-15);
    ASSERT_LT(b[1].max_abs_diff(p[3]), 1e-15);
    ASSERT_LT(b[2].max_abs_diff(p[1]), 1e-15);
    ASSERT_LT(b[3].max_abs_diff(p[1] * p[3]), 1e-15);
    for (size_t i = 0; i < 4; i++) {
        for (size_t j = 0; j < 4; j++) {
            ASSERT_NEAR(std::abs((b[i].adjoint() * b[j]).trace()), i == j ? 2 : 0, 1e-12);
        }
    }
}

TEST(channels, gpc_basis_gram_matrices) {
    for (size_t d : {2, 3, 4}) {
        auto b = gpc_basis(d);
        ASSERT_EQ(b.size(), d * d);
        for (size_t i = 0; i < b.size(); i++) {
            ASSERT_TRUE(b[i].is_unitary(1e-12));
            for (size_t j = 0; j < b.size(); j++) {
                complex t = (b[i].adjoint() * b[j]).trace();
                ASSERT_LT(std::abs(t - complex(i == j ? double(d) : 0.0)), 1e-9);
            }
        }
    }
    ASSERT_EQ(kind_of([] { gpc_basis(5); }), ErrorKind::UnsupportedDimension);
    ASSERT_EQ(kind_of([] { gpc_basis(1); }), ErrorKind::UnsupportedDimension);
}

TEST(channels, gpc_validation) {
    ASSERT_EQ(kind_of([] { GpcChannel::pauli({0.5, 0.5, 0.1, 0}); }), ErrorKind::InvalidDistribution);
    ASSERT_EQ(kind_of([] { GpcChannel::pauli({1.5, -0.5, 0, 0}); }), ErrorKind::InvalidDistribution);
    auto basis = gpc_basis(2);
    basis[1] = basis[0];
    ASSERT_THROW(GpcChannel(2, {1, 0, 0, 0}, basis), Error);
    ASSERT_THROW(GpcChannel::weyl(2, {1, 0, 0}), Error);
}

TEST(channels, characteristic_vector_examples) {
    ASSERT_EQ(characteristic_vector(GpcChannel::pauli({1, 0, 0, 0})), (std::vector<double>{1, 0, 0, 0}));
    auto half = characteristic_vector(GpcChannel::pauli({0.5, 0.5, 0, 0}));
    ASSERT_NEAR(half[0], M_SQRT1_2, 1e-15);
    ASSERT_NEAR(half[1], M_SQRT1_2, 1e-15);
    auto quarter = characteristic_vector(GpcChannel::pauli({0.25, 0.25, 0.25, 0.25}));
    double n2 = 0;
    for (double x : quarter) {
        ASSERT_NEAR(x, 0.5, 1e-15);
        n2 += x * x;
    }
    ASSERT_NEAR(n2, 1, 1e-12);
}

TEST(channels, gpc_channels_are_unital) {
    CounterRng rng(25, 0);
    for (size_t d : {2, 3, 4}) {
        for (int trial = 0; trial < 20; trial++) {
            auto g = GpcChannel::weyl(d, random_distribution(d * d, rng));
            auto mixed = complex{1.0 / d} * ComplexMatrix::identity(d);
            ASSERT_LT(g.to_kraus().apply(mixed).max_abs_diff(mixed), 1e-9);
            double n2 = 0;
            for (double x : characteristic_vector(g)) {
                n2 += x * x;
            }
            ASSERT_NEAR(n2, 1, 1e-12);
        }
    }
}

TEST(channels, apply_to_pure_uses_extension_for_bipartite_states) {
    auto ch = named_channel("amplitude_damping", 0.3);
    CounterRng rng(26, 0);
    StateVector psi(4);
    for (auto &e : psi) {
        e = rng.complex_normal();
    }
    double n = norm(psi);
    for (auto &e : psi) {
        e /= n;
    }
    auto direct = ch.apply_extended(ComplexMatrix::outer(psi));
    ASSERT_LT(ch.apply_to_pure(psi).max_abs_diff(direct), 1e-14);
    ASSERT_THROW(ch.apply_to_pure(StateVector(3)), Error);
}

TEST(channels, pure_state_from_bloch) {
    CounterRng rng(27, 0);
    for (int trial = 0; trial < 100; trial++) {
        Vec3 r = random_unit(rng);
        auto psi = pure_state_from_bloch(r);
        ASSERT_NEAR(norm(psi), 1, 1e-14);
        auto back = density_to_bloch(DensityMatrix(ComplexMatrix::outer(psi))).r();
        ASSERT_LT(norm(back - r), 1e-12);
    }
    auto south = pure_state_from_bloch({0, 0, -1});
    ASSERT_NEAR(std::abs(south[1]), 1, 1e-15);
}

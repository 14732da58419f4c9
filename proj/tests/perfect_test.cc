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


#include "chandisc/perfect.h"

#include <cmath>

#include "chandisc/error.h"
#include "chandisc/oracle.h"
#include "gtest/gtest.h"
#include "test_util.h"

using namespace chandisc;
using namespace chandisc::testing;

namespace {

const ComplexMatrix &I2() {
    static const ComplexMatrix m = ComplexMatrix::identity(2);
    return m;
}
const ComplexMatrix &X() {
    return pauli_matrices()[1];
}
const ComplexMatrix &Y() {
    return pauli_matrices()[2];
}
const ComplexMatrix &Z() {
    return pauli_matrices()[3];
}

// Checks the verdict invariants and, for a Yes, that the certificate makes
// the outputs perfectly distinguishable according to the oracle.
void expect_sound(const PerfectVerdict &v, const KrausChannel &e1, const KrausChannel &e2) {
    if (v.distinguishable == Verdict::Yes) {
        ASSERT_TRUE(v.certificate.has_value());
        EXPECT_NEAR(norm(*v.certificate), 1, 1e-12);
        size_t expected_len = v.strategy == Strategy::Product ? e1.dim() : e1.dim() * e1.dim();
        EXPECT_EQ(v.certificate->size(), expected_len);
        auto ops = cross_operators(e1, e2);
        EXPECT_LT(max_isotropy_residual(ops, *v.certificate), 1e-8);
        EXPECT_LT(helstrom_error_at(e1, e2, PriorPair::equal(), *v.certificate), 1e-8);
    }
    if (v.certificate.has_value()) {
        EXPECT_NEAR(v.residual, max_isotropy_residual(cross_operators(e1, e2), *v.certificate), 1e-15);
    }
}

GpcChannel random_gpc(size_t d, CounterRng &rng, double drop_probability) {
    std::vector<double> q;
    do {
        q = random_distribution(d * d, rng);
        double total = 0;
        for (auto &x : q) {
            if (rng.uniform() < drop_probability) {
                x = 0;
            }
            total += x;
        }
        if (total > 0) {
            for (auto &x : q) {
                x /= total;
            }
        }
    } while (std::all_of(q.begin(), q.end(), [](double x) { return x == 0; }));
    return GpcChannel::weyl(d, q);
}

// A GPC whose support avoids the support of `other`; falls back to a random
// one when other has full support.
GpcChannel complementary_gpc(const GpcChannel &other, CounterRng &rng) {
    std::vector<double> q(other.q().size());
    double total = 0;
    for (size_t k = 0; k < q.size(); k++) {
        if (other.q()[k] == 0) {
            q[k] = 0.1 + rng.uniform();
            total += q[k];
        }
    }
    if (total == 0) {
        return random_gpc(other.d(), rng, 0);
    }
    for (auto &x : q) {
        x /= total;
    }
    return GpcChannel::weyl(other.d(), q);
}

}  // namespace

TEST(perfect, names) {
    ASSERT_EQ(verdict_name(Verdict::Yes), "yes");
    ASSERT_EQ(verdict_name(Verdict::No), "no");
    ASSERT_EQ(verdict_name(Verdict::Unknown), "unknown");
    ASSERT_EQ(strategy_name(Strategy::Product), "product");
    ASSERT_EQ(strategy_name(Strategy::Entangled), "entangled");
    ASSERT_EQ(method_name(Method::UnitaryPolygon), "unitary_polygon");
    ASSERT_EQ(method_name(Method::GpcOrthogonality), "gpc_orthogonality");
    ASSERT_EQ(method_name(Method::QubitBlochExhaustion), "qubit_bloch_exhaustion");
    ASSERT_EQ(method_name(Method::NumericSearch), "numeric_search");
}

TEST(perfect, cross_operators_examples) {
    auto id = cross_operators(KrausChannel({I2()}), KrausChannel({I2()}));
    ASSERT_EQ(id.size(), 1);
    ASSERT_LT(id[0].max_abs_diff(I2()), 1e-15);

    auto xz = cross_operators(KrausChannel({X()}), KrausChannel({Z()}));
    ASSERT_EQ(xz.size(), 1);
    ASSERT_LT(xz[0].max_abs_diff(X() * Z()), 1e-15);

    complex h{M_SQRT1_2};
    auto mixed = cross_operators(KrausChannel({h * I2(), h * X()}), KrausChannel({Z()}));
    ASSERT_EQ(mixed.size(), 2);
    ASSERT_LT(mixed[0].max_abs_diff(h * Z()), 1e-15);
    ASSERT_LT(mixed[1].max_abs_diff(h * (X() * Z())), 1e-15);

    ASSERT_THROW(cross_operators(KrausChannel({I2()}), KrausChannel({ComplexMatrix::identity(3)})), Error);
}

TEST(perfect, unitary_x_vs_z) {
    auto v = unitary_perfect(X(), Z());
    ASSERT_EQ(v.distinguishable, Verdict::Yes);
    ASSERT_EQ(v.strategy, Strategy::Product);
    ASSERT_EQ(v.method, Method::UnitaryPolygon);
    auto w = X() * Z();
    ASSERT_LT(std::abs(expectation(*v.certificate, w)), 1e-12);
    expect_sound(v, KrausChannel({X()}), KrausChannel({Z()}));
}

TEST(perfect, unitary_no_examples) {
    auto same = unitary_perfect(I2(), I2());
    ASSERT_EQ(same.distinguishable, Verdict::No);
    ASSERT_FALSE(same.certificate.has_value());
    ComplexMatrix phase{{1, 0}, {0, complex{0, 1}}};
    ASSERT_EQ(unitary_perfect(I2(), phase).distinguishable, Verdict::No);
}

TEST(perfect, unitary_rejects_non_unitary) {
    try {
        unitary_perfect(I2(), ComplexMatrix{{1, 1}, {0, 1}});
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.kind(), ErrorKind::NotUnitary);
    }
}

TEST(perfect, unitary_triangle_certificate) {
    // Cube roots of unity need all three eigenvectors.
    complex w = std::polar(1.0, 2 * M_PI / 3);
    auto u = ComplexMatrix::diagonal(std::vector<complex>{1, w, w * w});
    auto v = unitary_perfect(ComplexMatrix::identity(3), u);
    ASSERT_EQ(v.distinguishable, Verdict::Yes);
    expect_sound(v, KrausChannel({ComplexMatrix::identity(3)}), KrausChannel({u}));
}

TEST(perfect, unitary_random_soundness) {
    CounterRng rng(51, 0);
    int yes = 0;
    for (int trial = 0; trial < 200; trial++) {
        size_t d = 2 + trial % 3;
        auto u1 = random_unitary(d, rng);
        auto u2 = random_unitary(d, rng);
        auto v = unitary_perfect(u1, u2);
        if (v.distinguishable == Verdict::Yes) {
            yes++;
        }
        expect_sound(v, KrausChannel({u1}), KrausChannel({u2}));
    }
    ASSERT_GT(yes, 20);
}

TEST(perfect, unitary_agrees_with_qubit_product) {
    CounterRng rng(52, 0);
    int yes = 0;
    for (int trial = 0; trial < 200; trial++) {
        auto u1 = random_unitary(2, rng);
        auto u2 = random_unitary(2, rng);
        if (trial % 4 == 0) {
            // Force the boundary case of eigenvalues ±e^{i phi}.
            auto e = normal_eig(u1.adjoint() * u2);
            ComplexMatrix flip = ComplexMatrix::diagonal(std::vector<complex>{1, -1});
            u2 = u1 * e.eigenvectors * flip * e.eigenvectors.adjoint();
        }
        KrausChannel k1({u1});
        KrausChannel k2({u2});
        auto a = unitary_perfect(u1, u2);
        auto b = qubit_product_perfect(k1, k2);
        ASSERT_EQ(a.distinguishable, b.distinguishable) << trial;
        yes += a.distinguishable == Verdict::Yes;
        expect_sound(b, k1, k2);
    }
    ASSERT_GE(yes, 50);
}

TEST(perfect, gpc_examples) {
    auto a = gpc_perfect_entangled(GpcChannel::pauli({1, 0, 0, 0}), GpcChannel::pauli({0, 1, 0, 0}));
    ASSERT_EQ(a.distinguishable, Verdict::Yes);
    ASSERT_EQ(a.strategy, Strategy::Entangled);
    ASSERT_EQ(a.method, Method::GpcOrthogonality);
    auto bell = maximally_entangled_state(2);
    for (size_t k = 0; k < 4; k++) {
        ASSERT_LT(std::abs((*a.certificate)[k] - bell[k]), 1e-15);
    }
    ASSERT_NEAR(std::abs((*a.certificate)[0]), M_SQRT1_2, 1e-15);
    ASSERT_NEAR(std::abs((*a.certificate)[3]), M_SQRT1_2, 1e-15);

    auto b = gpc_perfect_entangled(GpcChannel::pauli({0.5, 0.5, 0, 0}), GpcChannel::pauli({0.5, 0, 0.5, 0}));
    ASSERT_EQ(b.distinguishable, Verdict::No);

    auto g1 = GpcChannel::pauli({0, 0.2, 0.3, 0.5});
    auto g2 = GpcChannel::pauli({1, 0, 0, 0});
    auto c = gpc_perfect_entangled(g1, g2);
    ASSERT_EQ(c.distinguishable, Verdict::Yes);
    expect_sound(c, g1.to_kraus(), g2.to_kraus());
}

TEST(perfect, gpc_basis_mismatch) {
    auto pauli = GpcChannel::pauli({1, 0, 0, 0});
    auto weyl = GpcChannel::weyl(2, {0, 1, 0, 0});
    try {
        gpc_perfect_entangled(pauli, weyl);
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.kind(), ErrorKind::BasisMismatch);
    }
    std::vector<double> q3(9, 0);
    q3[0] = 1;
    ASSERT_THROW(gpc_perfect_entangled(GpcChannel::weyl(2, {1, 0, 0, 0}), GpcChannel::weyl(3, q3)), Error);
}

TEST(perfect, gpc_agrees_with_numeric_search) {
    CounterRng rng(53, 0);
    int yes = 0;
    for (int trial = 0; trial < 200; trial++) {
        auto g1 = random_gpc(2, rng, 0.5);
        auto g2 = trial % 2 == 0 ? complementary_gpc(g1, rng) : random_gpc(2, rng, 0.5);
        auto exact = gpc_perfect_entangled(g1, g2);
        auto k1 = g1.to_kraus();
        auto k2 = g2.to_kraus();
        auto ops = cross_operators(k1, k2);
        auto numeric = numeric_isotropic_search(ops, true, 1000 + trial, 8);
        ASSERT_NE(numeric.distinguishable, Verdict::No);
        ASSERT_EQ(exact.distinguishable == Verdict::Yes, numeric.distinguishable == Verdict::Yes) << trial;
        yes += exact.distinguishable == Verdict::Yes;
        expect_sound(exact, k1, k2);
        expect_sound(numeric, k1, k2);
    }
    ASSERT_GT(yes, 60);
    ASSERT_LT(yes, 180);
}

TEST(perfect, qubit_product_examples) {
    auto a = qubit_product_perfect(KrausChannel({X()}), KrausChannel({Z()}));
    ASSERT_EQ(a.distinguishable, Verdict::Yes);
    ASSERT_EQ(a.method, Method::QubitBlochExhaustion);
    ASSERT_EQ(a.strategy, Strategy::Product);
    expect_sound(a, KrausChannel({X()}), KrausChannel({Z()}));

    auto g1 = GpcChannel::pauli({0, 0.2, 0.3, 0.5});
    auto b = qubit_product_perfect(g1.to_kraus(), KrausChannel({I2()}));
    ASSERT_EQ(b.distinguishable, Verdict::No);
    ASSERT_FALSE(b.certificate.has_value());

    ASSERT_EQ(qubit_product_perfect(KrausChannel({I2()}), KrausChannel({I2()})).distinguishable, Verdict::No);
}

TEST(perfect, qubit_product_rejects_qutrits) {
    auto id3 = KrausChannel({ComplexMatrix::identity(3)});
    try {
        qubit_product_perfect(id3, id3);
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.kind(), ErrorKind::DimensionMismatch);
    }
}

TEST(perfect, qubit_product_tangent_sphere) {
    // K = |0><0| - (1/2) I... as a channel pair: isotropy <psi|Z|psi> = 0 and
    // <psi|X|psi> = 0 leave r = (0, ±1, 0), a rank-2 system.
    complex h{M_SQRT1_2};
    KrausChannel e1({h * I2(), h * I2()});
    KrausChannel e2({h * X(), h * Z()});
    auto v = qubit_product_perfect(e1, e2);
    ASSERT_EQ(v.distinguishable, Verdict::Yes);
    expect_sound(v, e1, e2);
    // Adding Y as well leaves no unit solution.
    KrausChannel e3({complex{std::sqrt(1.0 / 3)} * X(), complex{std::sqrt(1.0 / 3)} * Y(),
                     complex{std::sqrt(1.0 / 3)} * Z()});
    ASSERT_EQ(qubit_product_perfect(KrausChannel({I2()}), e3).distinguishable, Verdict::No);
}

TEST(perfect, qubit_product_soundness_and_hierarchy) {
    CounterRng rng(54, 0);
    int yes = 0;
    for (int trial = 0; trial < 200; trial++) {
        KrausChannel e1({I2()});
        KrausChannel e2({I2()});
        switch (trial % 3) {
            case 0:
                e1 = KrausChannel({random_unitary(2, rng)});
                e2 = KrausChannel({random_unitary(2, rng)});
                break;
            case 1: {
                auto g1 = random_gpc(2, rng, 0.6);
                e1 = GpcChannel::pauli({g1.q()[0], g1.q()[1], g1.q()[2], g1.q()[3]}).to_kraus();
                auto g2 = random_gpc(2, rng, 0.6);
                e2 = GpcChannel::pauli({g2.q()[0], g2.q()[1], g2.q()[2], g2.q()[3]}).to_kraus();
                break;
            }
            default:
                e1 = random_kraus_channel(2, 2, rng);
                e2 = KrausChannel({random_unitary(2, rng)});
                break;
        }
        auto v = qubit_product_perfect(e1, e2);
        ASSERT_NE(v.distinguishable, Verdict::Unknown);
        expect_sound(v, e1, e2);
        if (v.distinguishable == Verdict::Yes) {
            yes++;
            auto ops = cross_operators(e1, e2);
            auto entangled = numeric_isotropic_search(ops, true, 77 + trial, 8);
            ASSERT_EQ(entangled.distinguishable, Verdict::Yes) << trial;
            expect_sound(entangled, e1, e2);
        }
    }
    ASSERT_GT(yes, 15);
}

TEST(perfect, numeric_search_examples) {
    std::vector<ComplexMatrix> y{Y()};
    auto a = numeric_isotropic_search(y, false, 1, 4);
    ASSERT_EQ(a.distinguishable, Verdict::Yes);
    ASSERT_EQ(a.method, Method::NumericSearch);
    ASSERT_LT(std::abs(expectation(*a.certificate, Y())), 1e-8);

    std::vector<ComplexMatrix> id{I2()};
    auto b = numeric_isotropic_search(id, false, 1, 4);
    ASSERT_EQ(b.distinguishable, Verdict::Unknown);
    ASSERT_FALSE(b.certificate.has_value());

    auto g1 = GpcChannel::pauli({0, 0.2, 0.3, 0.5});
    auto g2 = GpcChannel::pauli({1, 0, 0, 0});
    auto ops = cross_operators(g1.to_kraus(), g2.to_kraus());
    auto c = numeric_isotropic_search(ops, true, 1, 8);
    ASSERT_EQ(c.distinguishable, Verdict::Yes);
    ASSERT_EQ(c.strategy, Strategy::Entangled);
    expect_sound(c, g1.to_kraus(), g2.to_kraus());
    auto product = numeric_isotropic_search(ops, false, 1, 8);
    ASSERT_EQ(product.distinguishable, Verdict::Unknown);
}

TEST(perfect, numeric_search_is_reproducible) {
    std::vector<ComplexMatrix> ops{X() * Z(), Y()};
    auto a = numeric_isotropic_search(ops, false, 9, 4);
    auto b = numeric_isotropic_search(ops, false, 9, 4);
    ASSERT_EQ(a.distinguishable, b.distinguishable);
    ASSERT_EQ(a.certificate, b.certificate);
    ASSERT_THROW(numeric_isotropic_search(ops, false, 9, 0), Error);
}

TEST(perfect, qutrit_gpc_soundness) {
    CounterRng rng(55, 0);
    for (int trial = 0; trial < 30; trial++) {
        auto g1 = random_gpc(3, rng, 0.6);
        auto g2 = complementary_gpc(g1, rng);
        auto v = gpc_perfect_entangled(g1, g2);
        expect_sound(v, g1.to_kraus(), g2.to_kraus());
    }
}

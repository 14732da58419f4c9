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

#include "chandisc/discrim.h"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <sstream>

#include "chandisc/error.h"
#include "chandisc/sphereopt.h"

namespace chandisc {

namespace {

constexpr double kPriorTol = 1e-12;
constexpr double kUnitalTol = 1e-12;

void validate_pauli(const PauliProbs &q) {
    double total = 0;
    for (double x : q) {
        if (!(x >= 0 && x <= 1)) {
            throw Error(ErrorKind::InvalidDistribution, "Pauli probabilities must lie in [0, 1]");
        }
        total += x;
    }
    if (std::abs(total - 1) > kPriorTol) {
        std::stringstream ss;
        ss.precision(17);
        ss << "Pauli probabilities sum to " << total << ", not 1";
        throw Error(ErrorKind::InvalidDistribution, ss.str());
    }
}

std::array<double, 4> weighted_difference(const PauliProbs &q1, const PauliProbs &q2, const PriorPair &priors) {
    validate_pauli(q1);
    validate_pauli(q2);
    std::array<double, 4> r{};
    for (size_t i = 0; i < 4; i++) {
        r[i] = priors.p1() * q1[i] - priors.p2() * q2[i];
    }
    return r;
}

DiscriminationResult from_contrast(double contrast, const Vec3 &probe, const PriorPair &priors) {
    double bias = std::abs(priors.p1() - priors.p2());
    if (bias >= contrast) {
        return {std::min(priors.p1(), priors.p2()), Regime::GuessPrior, std::nullopt, bias};
    }
    return {(1 - contrast) / 2, Regime::Measure, probe, contrast};
}

}  // namespace

PriorPair::PriorPair(double p1, double p2) : p1_(p1), p2_(p2) {
    if (!(p1 >= 0 && p1 <= 1 && p2 >= 0 && p2 <= 1) || std::abs(p1 + p2 - 1) > kPriorTol) {
        std::stringstream ss;
        ss << "priors (" << p1 << ", " << p2 << ") are not a probability pair";
        throw Error(ErrorKind::InvalidDistribution, ss.str());
    }
}

PriorPair PriorPair::from_p1(double p1) {
    return PriorPair(p1, 1 - p1);
}

PriorPair PriorPair::equal() {
    return PriorPair(0.5, 0.5);
}

std::string_view regime_name(Regime regime) {
    return regime == Regime::GuessPrior ? "guess_prior" : "measure";
}

double helstrom_trace_norm(const BlochVector &r1, const BlochVector &r2, const PriorPair &priors) {
    Vec3 diff = priors.p1() * r1.r() - priors.p2() * r2.r();
    return std::max(std::abs(priors.p1() - priors.p2()), norm(diff));
}

double max_abs_identity(double a, double b) {
    double result = 0.5 * (std::abs(a + b) + std::abs(a - b));
    assert(std::abs(result - std::max(std::abs(a), std::abs(b))) <= 1e-14 * std::max(1.0, result));
    return result;
}

DiscriminationResult min_error_probability(const AffineChannel &e1, const AffineChannel &e2,
                                           const PriorPair &priors) {
    RealMatrix3 m = priors.p1() * e1.m() - priors.p2() * e2.m();
    Vec3 c = priors.p1() * e1.c() - priors.p2() * e2.c();
    auto best = maximize_on_sphere(m, c);
    return from_contrast(best.value, best.argmax, priors);
}

DiscriminationResult min_error_unital(const RealMatrix3 &m1, const RealMatrix3 &m2, const PriorPair &priors) {
    RealMatrix3 m = priors.p1() * m1 - priors.p2() * m2;
    double s = spectral_norm(m);
    // The probe is the top right singular vector, which is what the sphere
    // maximizer returns for c = 0.
    auto best = maximize_on_sphere(m, {0, 0, 0});
    return from_contrast(s, best.argmax, priors);
}

DiscriminationResult min_error_unital(const AffineChannel &e1, const AffineChannel &e2, const PriorPair &priors) {
    if (norm(e1.c()) > kUnitalTol || norm(e2.c()) > kUnitalTol) {
        throw Error(ErrorKind::NotUnital, "spectral-norm formula needs c = 0 for both channels");
    }
    return min_error_unital(e1.m(), e2.m(), priors);
}

DiscriminationResult pauli_closed_form(const PauliProbs &q1, const PauliProbs &q2, const PriorPair &priors) {
    auto r = weighted_difference(q1, q2, priors);
    std::array<double, 3> contrast = {
        std::abs(r[0] + r[1] - r[2] - r[3]),
        std::abs(r[0] + r[2] - r[1] - r[3]),
        std::abs(r[0] + r[3] - r[1] - r[2]),
    };
    size_t axis = 0;
    for (size_t k = 1; k < 3; k++) {
        if (contrast[k] > contrast[axis]) {
            axis = k;
        }
    }
    Vec3 probe{};
    probe[axis] = 1;
    return from_contrast(contrast[axis], probe, priors);
}

double pauli_sacchi_form(const PauliProbs &q1, const PauliProbs &q2, const PriorPair &priors) {
    auto r = weighted_difference(q1, q2, priors);
    double m = std::max({
        std::abs(r[0] + r[3]) + std::abs(r[1] + r[2]),
        std::abs(r[0] + r[1]) + std::abs(r[2] + r[3]),
        std::abs(r[0] + r[2]) + std::abs(r[1] + r[3]),
    });
    return (1 - m) / 2;
}

}  // namespace chandisc

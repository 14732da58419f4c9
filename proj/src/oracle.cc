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

#include "chandisc/oracle.h"

#include <algorithm>
#include <cmath>

#include "chandisc/error.h"

namespace chandisc {

namespace {

constexpr double kNormTol = 1e-9;
constexpr double kProjectorTol = 1e-12;
// Bipartite random probes draw from streams offset past any product stream.
constexpr uint64_t kEntangledStreamBase = uint64_t{1} << 40;

ComplexMatrix weighted_difference(const KrausChannel &e1, const KrausChannel &e2, const PriorPair &priors,
                                  std::span<const complex> psi) {
    if (e1.dim() != e2.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "channels act on different dimensions");
    }
    if (std::abs(norm(psi) - 1) > kNormTol) {
        throw Error(ErrorKind::NotNormalized, "probe state must have unit norm");
    }
    return complex{priors.p1()} * e1.apply_to_pure(psi) - complex{priors.p2()} * e2.apply_to_pure(psi);
}

StateVector tensor_with_zero(std::span<const complex> psi) {
    size_t d = psi.size();
    StateVector out(d * d);
    for (size_t i = 0; i < d; i++) {
        out[i * d] = psi[i];
    }
    return out;
}

}  // namespace

double helstrom_error_at(const KrausChannel &e1, const KrausChannel &e2, const PriorPair &priors,
                         std::span<const complex> psi) {
    auto diff = weighted_difference(e1, e2, priors, psi);
    return std::max(0.0, 0.5 * (1 - trace_norm_hermitian(diff)));
}

OracleEstimate sampled_min_error(const KrausChannel &e1, const KrausChannel &e2, const PriorPair &priors, size_t n,
                                 bool entangled, uint64_t seed) {
    if (n < 1) {
        throw Error(ErrorKind::ParamOutOfRange, "need at least one random sample");
    }
    size_t d = e1.dim();
    OracleEstimate best{1.0, {}, 0, entangled};
    auto consider = [&](StateVector psi) {
        double err = helstrom_error_at(e1, e2, priors, psi);
        best.samples++;
        if (err < best.p_error_estimate) {
            best.p_error_estimate = err;
            best.best_input = std::move(psi);
        }
    };

    std::vector<StateVector> product = fixed_probe_states(d);
    for (size_t i = 0; i < n; i++) {
        CounterRng rng(seed, i);
        product.push_back(haar_state(d, rng));
    }

    if (!entangled) {
        for (auto &psi : product) {
            consider(std::move(psi));
        }
        return best;
    }
    consider(maximally_entangled_state(d));
    for (const auto &psi : product) {
        consider(tensor_with_zero(psi));
    }
    for (size_t i = 0; i < n; i++) {
        CounterRng rng(seed, kEntangledStreamBase + i);
        consider(haar_state(d * d, rng));
    }
    return best;
}

double simulate_experiment(const KrausChannel &e1, const KrausChannel &e2, const PriorPair &priors,
                           std::span<const complex> psi, size_t trials, uint64_t seed) {
    if (trials < 1) {
        throw Error(ErrorKind::ParamOutOfRange, "need at least one trial");
    }
    auto rho1 = e1.apply_to_pure(psi);
    auto rho2 = e2.apply_to_pure(psi);
    auto diff = complex{priors.p1()} * rho1 - complex{priors.p2()} * rho2;
    auto eig = hermitian_eig(diff);
    size_t n = diff.dim();
    ComplexMatrix positive(n);
    for (size_t k = 0; k < n; k++) {
        if (eig.eigenvalues[k] < -kProjectorTol) {
            continue;
        }
        for (size_t r = 0; r < n; r++) {
            for (size_t c = 0; c < n; c++) {
                positive(r, c) += eig.eigenvectors(r, k) * std::conj(eig.eigenvectors(c, k));
            }
        }
    }
    double plus_given_1 = std::clamp((positive * rho1).trace().real(), 0.0, 1.0);
    double plus_given_2 = std::clamp((positive * rho2).trace().real(), 0.0, 1.0);

    size_t errors = 0;
    for (size_t t = 0; t < trials; t++) {
        CounterRng rng(seed, t);
        bool first = rng.uniform() < priors.p1();
        bool plus = rng.uniform() < (first ? plus_given_1 : plus_given_2);
        if (first != plus) {
            errors++;
        }
    }
    return static_cast<double>(errors) / static_cast<double>(trials);
}

StateVector haar_state(size_t dim, CounterRng &rng) {
    StateVector psi(dim);
    double n = 0;
    while (n == 0) {
        for (auto &e : psi) {
            e = rng.complex_normal();
        }
        n = norm(psi);
    }
    for (auto &e : psi) {
        e /= n;
    }
    return psi;
}

StateVector maximally_entangled_state(size_t d) {
    StateVector psi(d * d);
    for (size_t k = 0; k < d; k++) {
        psi[k * d + k] = 1 / std::sqrt(static_cast<double>(d));
    }
    return psi;
}

std::vector<StateVector> fixed_probe_states(size_t d) {
    std::vector<StateVector> out;
    for (size_t k = 0; k < d; k++) {
        StateVector psi(d);
        psi[k] = 1;
        out.push_back(std::move(psi));
    }
    const std::array<complex, 4> phases = {complex{1}, complex{-1}, complex{0, 1}, complex{0, -1}};
    for (size_t j = 0; j < d; j++) {
        for (size_t k = j + 1; k < d; k++) {
            for (const auto &w : phases) {
                StateVector psi(d);
                psi[j] = M_SQRT1_2;
                psi[k] = w * M_SQRT1_2;
                out.push_back(std::move(psi));
            }
        }
    }
    return out;
}

KrausChannel random_kraus_channel(size_t dim, size_t n_ops, CounterRng &rng) {
    if (dim < 1 || n_ops < 1) {
        throw Error(ErrorKind::ParamOutOfRange, "need a positive dimension and operator count");
    }
    // Columns of a (n_ops * dim) x dim Gaussian matrix, orthonormalized.
    size_t rows = n_ops * dim;
    std::vector<StateVector> cols(dim, StateVector(rows));
    for (auto &col : cols) {
        for (auto &e : col) {
            e = rng.complex_normal();
        }
    }
    for (size_t c = 0; c < dim; c++) {
        for (size_t prev = 0; prev < c; prev++) {
            complex overlap = inner(cols[prev], cols[c]);
            for (size_t r = 0; r < rows; r++) {
                cols[c][r] -= overlap * cols[prev][r];
            }
        }
        double n = norm(cols[c]);
        for (auto &e : cols[c]) {
            e /= n;
        }
    }
    std::vector<ComplexMatrix> ops;
    for (size_t k = 0; k < n_ops; k++) {
        ComplexMatrix e(dim);
        for (size_t r = 0; r < dim; r++) {
            for (size_t c = 0; c < dim; c++) {
                e(r, c) = cols[c][k * dim + r];
            }
        }
        ops.push_back(std::move(e));
    }
    return KrausChannel(std::move(ops));
}

}  // namespace chandisc

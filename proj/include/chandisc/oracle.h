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

#ifndef CHANDISC_ORACLE_H
#define CHANDISC_ORACLE_H

#include <cstdint>
#include <span>
#include <vector>

#include "chandisc/channels.h"
#include "chandisc/discrim.h"
#include "chandisc/rng.h"

namespace chandisc {

// Brute-force reference computations that work directly on density matrices,
// sharing nothing with the Bloch-sphere route beyond the eigensolver.

struct OracleEstimate {
    /// Best error found; an upper bound on the true optimum.
    double p_error_estimate;
    StateVector best_input;
    /// Number of probe states evaluated (random plus deterministic).
    size_t samples;
    bool entangled;
};

/// (1 - ||p1 rho1 - p2 rho2||_1) / 2 for outputs of psi. A psi of length d^2
/// is sent through channel (x) identity.
double helstrom_error_at(const KrausChannel &e1, const KrausChannel &e2, const PriorPair &priors,
                         std::span<const complex> psi);

/// Smallest helstrom_error_at over n Haar-random probes plus fixed probes.
///
/// Product mode always tries the basis states and the equal superpositions
/// (|j> + w|k>)/sqrt(2), w in {1, -1, i, -i}; for a qubit these are the six
/// Bloch axis states. Entangled mode tries the maximally entangled state,
/// every product-mode probe (random ones included) tensored with |0>, and n
/// Haar-random bipartite probes, so its estimate never exceeds product mode
/// for the same seed.
OracleEstimate sampled_min_error(const KrausChannel &e1, const KrausChannel &e2, const PriorPair &priors, size_t n,
                                 bool entangled, uint64_t seed);

/// Monte Carlo run of the Helstrom measurement at probe psi. Each trial picks
/// channel k with probability p_k and measures {P+, I - P+}, where P+
/// projects onto eigenvalues >= -1e-12 of p1 rho1 - p2 rho2; outcome P+ means
/// "channel 1". Returns the observed error frequency.
double simulate_experiment(const KrausChannel &e1, const KrausChannel &e2, const PriorPair &priors,
                           std::span<const complex> psi, size_t trials, uint64_t seed);

/// Haar-random unit vector.
StateVector haar_state(size_t dim, CounterRng &rng);

/// (1/sqrt(d)) sum_k |k>|k>.
StateVector maximally_entangled_state(size_t d);

/// Deterministic product probes described at sampled_min_error.
std::vector<StateVector> fixed_probe_states(size_t d);

/// Random channel with n_ops Kraus operators from a Haar-random isometry.
KrausChannel random_kraus_channel(size_t dim, size_t n_ops, CounterRng &rng);

}  // namespace chandisc

#endif

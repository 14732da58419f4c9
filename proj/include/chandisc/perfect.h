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

#ifndef CHANDISC_PERFECT_H
#define CHANDISC_PERFECT_H

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "chandisc/channels.h"

namespace chandisc {

// Two channels are perfectly distinguishable exactly when some probe psi makes
// every cross operator K_ij = E1_i^dagger E2_j isotropic, <psi|K_ij|psi> = 0
// (with K_ij (x) I and a bipartite psi when an ancilla is allowed). The
// deciders below are exact for the special families they name; the numeric
// search never answers No.

enum class Verdict { Yes, No, Unknown };
enum class Strategy { Product, Entangled };
enum class Method { UnitaryPolygon, GpcOrthogonality, QubitBlochExhaustion, NumericSearch };

std::string_view verdict_name(Verdict v);
std::string_view strategy_name(Strategy s);
std::string_view method_name(Method m);

struct PerfectVerdict {
    Verdict distinguishable;
    Strategy strategy;
    /// Unit probe state (length d for Product, d^2 for Entangled); present
    /// whenever distinguishable == Yes.
    std::optional<StateVector> certificate;
    Method method;
    /// max |<psi|K_ij|psi>| at the certificate, 0 without one.
    double residual = 0;
};

/// All E1_i^dagger E2_j in row-major (i, j) order.
std::vector<ComplexMatrix> cross_operators(const KrausChannel &e1, const KrausChannel &e2);

/// max_k |<psi|K_k|psi>|; a psi of length d^2 is paired with K_k (x) I.
double max_isotropy_residual(std::span<const ComplexMatrix> ops, std::span<const complex> psi);

/// Unitaries are perfectly distinguishable iff the eigenvalues of
/// U1^dagger U2 surround the origin. The certificate mixes at most three
/// eigenvectors with convex weights that cancel the eigenvalues.
PerfectVerdict unitary_perfect(const ComplexMatrix &u1, const ComplexMatrix &u2);

/// Entangled-probe decision for two channels over the same basis: Yes iff the
/// characteristic vectors are orthogonal, certified by the maximally
/// entangled state.
PerfectVerdict gpc_perfect_entangled(const GpcChannel &g1, const GpcChannel &g2);

/// Exact product-probe decision for qubit channels: each isotropy condition
/// is affine in the Bloch vector, so the solution set is an affine subspace
/// that either meets the unit sphere or not.
PerfectVerdict qubit_product_perfect(const KrausChannel &e1, const KrausChannel &e2);

/// Levenberg-Marquardt minimization of L(psi) = sum_k |<psi|K_k|psi>|^2 from
/// `restarts` seeded random starts. Yes when L < 1e-16, Unknown otherwise.
PerfectVerdict numeric_isotropic_search(std::span<const ComplexMatrix> ops, bool entangled, uint64_t seed,
                                        size_t restarts);

}  // namespace chandisc

#endif

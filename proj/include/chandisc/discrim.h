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

#ifndef CHANDISC_DISCRIM_H
#define CHANDISC_DISCRIM_H

#include <array>
#include <optional>
#include <string_view>

#include "chandisc/channels.h"

namespace chandisc {

/// A priori probabilities of the two hypotheses.
class PriorPair {
   public:
    /// Requires both in [0, 1] and |p1 + p2 - 1| <= 1e-12.
    PriorPair(double p1, double p2);
    static PriorPair from_p1(double p1);
    static PriorPair equal();

    double p1() const noexcept {
        return p1_;
    }
    double p2() const noexcept {
        return p2_;
    }

   private:
    double p1_;
    double p2_;
};

enum class Regime {
    /// No probe state or measurement helps; guess the more likely channel.
    GuessPrior,
    Measure,
};

std::string_view regime_name(Regime regime);

struct DiscriminationResult {
    double p_error;
    Regime regime;
    /// Present iff regime == Measure.
    std::optional<Vec3> optimal_bloch;
    /// max over probes of ||p1 rho1 - p2 rho2||_1.
    double trace_norm_at_opt;
};

/// ||p1 rho1 - p2 rho2||_1 for qubit states, as max{|p1 - p2|, ||p1 r1 - p2 r2||}.
double helstrom_trace_norm(const BlochVector &r1, const BlochVector &r2, const PriorPair &priors);

/// (|a + b| + |a - b|) / 2, which equals max{|a|, |b|}.
double max_abs_identity(double a, double b);

/// Minimum error probability for telling e1 from e2 with a single unentangled
/// probe: (1 - max{|p1 - p2|, max_{|r|=1} ||M r + c||}) / 2 where
/// M = p1 M1 - p2 M2 and c = p1 c1 - p2 c2. A tie |p1 - p2| = s counts as
/// GuessPrior.
DiscriminationResult min_error_probability(const AffineChannel &e1, const AffineChannel &e2,
                                           const PriorPair &priors);

/// Same quantity for unital channels via the spectral norm of p1 M1 - p2 M2.
DiscriminationResult min_error_unital(const AffineChannel &e1, const AffineChannel &e2, const PriorPair &priors);
DiscriminationResult min_error_unital(const RealMatrix3 &m1, const RealMatrix3 &m2, const PriorPair &priors);

using PauliProbs = std::array<double, 4>;

/// Closed form for Pauli channels, q indexed (I, X, Y, Z). With
/// r_i = p1 q1_i - p2 q2_i the contrast along axis k is
/// |r_0 + r_k - (other two)|; the optimal probe is the best axis (x before y
/// before z on ties).
DiscriminationResult pauli_closed_form(const PauliProbs &q1, const PauliProbs &q2, const PriorPair &priors);

/// Alternative closed form (1 - max{|r0+r3|+|r1+r2|, |r0+r1|+|r2+r3|, |r0+r2|+|r1+r3|}) / 2.
double pauli_sacchi_form(const PauliProbs &q1, const PauliProbs &q2, const PriorPair &priors);

}  // namespace chandisc

#endif

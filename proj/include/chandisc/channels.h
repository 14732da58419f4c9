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

#ifndef CHANDISC_CHANNELS_H
#define CHANDISC_CHANNELS_H

#include <array>
#include <string_view>
#include <vector>

#include "chandisc/linalg.h"

namespace chandisc {

/// Qubit state coordinate; rho = (I + r.sigma) / 2. Norm at most 1 + 1e-12.
class BlochVector {
   public:
    explicit BlochVector(const Vec3 &r);
    const Vec3 &r() const noexcept {
        return r_;
    }
    double norm() const;

   private:
    Vec3 r_;
};

/// Unit-trace positive semidefinite Hermitian matrix (tolerance 1e-9).
class DensityMatrix {
   public:
    explicit DensityMatrix(ComplexMatrix m);
    const ComplexMatrix &matrix() const noexcept {
        return m_;
    }
    size_t dim() const noexcept {
        return m_.dim();
    }

   private:
    ComplexMatrix m_;
};

/// Trace-preserving operation rho -> sum_i E_i rho E_i^dagger.
class KrausChannel {
   public:
    /// Throws unless all ops share one dimension and sum E^dagger E = I within
    /// 1e-9.
    explicit KrausChannel(std::vector<ComplexMatrix> ops);

    size_t dim() const noexcept {
        return dim_;
    }
    const std::vector<ComplexMatrix> &ops() const noexcept {
        return ops_;
    }

    /// Applies the channel to a dim x dim operator.
    ComplexMatrix apply(const ComplexMatrix &rho) const;
    /// Applies channel (x) identity to an operator on a dim^2 bipartite
    /// space, system first.
    ComplexMatrix apply_extended(const ComplexMatrix &rho) const;
    /// Output for a pure input: dim-length psi uses apply, dim^2-length psi
    /// uses apply_extended.
    ComplexMatrix apply_to_pure(std::span<const complex> psi) const;

   private:
    size_t dim_;
    std::vector<ComplexMatrix> ops_;
};

/// Bloch-sphere action r -> m r + c of a qubit channel.
///
/// Construction checks that 200 Fibonacci-sphere unit vectors land in the
/// closed ball (slack 1e-9). Complete positivity is not checked.
class AffineChannel {
   public:
    AffineChannel(const RealMatrix3 &m, const Vec3 &c);
    const RealMatrix3 &m() const noexcept {
        return m_;
    }
    const Vec3 &c() const noexcept {
        return c_;
    }
    Vec3 apply(const Vec3 &r) const;

   private:
    RealMatrix3 m_;
    Vec3 c_;
};

/// rho -> sum_n q_n U_n rho U_n^dagger over a trace-orthogonal unitary basis
/// (Tr U_m^dagger U_n = d delta_mn).
class GpcChannel {
   public:
    GpcChannel(size_t d, std::vector<double> q, std::vector<ComplexMatrix> basis);

    /// Pauli channel over (I, X, Y, Z).
    static GpcChannel pauli(const std::array<double, 4> &q);
    /// Channel over the Weyl-Heisenberg basis from gpc_basis(d).
    static GpcChannel weyl(size_t d, std::vector<double> q);

    size_t d() const noexcept {
        return d_;
    }
    const std::vector<double> &q() const noexcept {
        return q_;
    }
    const std::vector<ComplexMatrix> &basis() const noexcept {
        return basis_;
    }
    /// Kraus set {sqrt(q_n) U_n}.
    KrausChannel to_kraus() const;
    bool has_pauli_basis() const;
    bool same_basis(const GpcChannel &other) const;

   private:
    size_t d_;
    std::vector<double> q_;
    std::vector<ComplexMatrix> basis_;
};

enum class NamedChannel {
    BitFlip,
    PhaseFlip,
    BitPhaseFlip,
    Depolarizing,
    PhaseDamping,
    AmplitudeDamping,
};

/// Parses "bit_flip", "phase_flip", ... ; throws Error(UnknownName).
NamedChannel parse_channel_name(std::string_view name);
std::string_view channel_name(NamedChannel name);

/// (I, X, Y, Z).
const std::array<ComplexMatrix, 4> &pauli_matrices();

DensityMatrix bloch_to_density(const BlochVector &r);
/// r_k = Tr(sigma_k rho); throws DimensionMismatch unless rho is 2x2.
BlochVector density_to_bloch(const DensityMatrix &rho);

/// Unit state vector whose Bloch vector is r (requires |r| = 1 within 1e-9).
StateVector pure_state_from_bloch(const Vec3 &r);

/// M_kl = Tr(sigma_k E(sigma_l)) / 2, c_k = Tr(sigma_k E(I)) / 2.
AffineChannel kraus_to_affine(const KrausChannel &ch);

/// Standard Kraus sets for the six textbook qubit channels. param is p for the
/// flip and depolarizing channels, lambda for the damping channels.
KrausChannel named_channel(NamedChannel name, double param);
KrausChannel named_channel(std::string_view name, double param);

/// M = diag(2(q0 + q_i) - 1), c = 0. Requires the (I, X, Y, Z) basis.
AffineChannel pauli_to_affine(const GpcChannel &g);

/// d^2 unitaries X^a Z^b at index a * d + b, for 2 <= d <= 4.
std::vector<ComplexMatrix> gpc_basis(size_t d);

/// (sqrt(q_0), ..., sqrt(q_{d^2-1})).
std::vector<double> characteristic_vector(const GpcChannel &g);

}  // namespace chandisc

#endif

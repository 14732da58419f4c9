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
#include <sstream>
#include <string>

#include "chandisc/error.h"

namespace chandisc {

namespace {

constexpr double kBlochSlack = 1e-12;
constexpr double kStateTol = 1e-9;
constexpr double kCompletenessTol = 1e-9;
constexpr double kBallSlack = 1e-9;
constexpr size_t kBallSamples = 200;
constexpr double kDistributionTol = 1e-12;
constexpr double kOrthogonalityTol = 1e-9;

constexpr std::array<std::string_view, 6> kChannelNames = {
    "bit_flip", "phase_flip", "bit_phase_flip", "depolarizing", "phase_damping", "amplitude_damping",
};

// sum_i E_i x E_i^dagger.
ComplexMatrix conjugate_sum(const std::vector<ComplexMatrix> &ops, const ComplexMatrix &x) {
    ComplexMatrix out(x.dim());
    for (const auto &e : ops) {
        out += e * x * e.adjoint();
    }
    return out;
}

}  // namespace

BlochVector::BlochVector(const Vec3 &r) : r_(r) {
    double n = chandisc::norm(r);
    if (!(n <= 1 + kBlochSlack)) {
        std::stringstream ss;
        ss << "Bloch vector norm " << n << " exceeds 1";
        throw Error(ErrorKind::InvalidChannel, ss.str());
    }
}

double BlochVector::norm() const {
    return chandisc::norm(r_);
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
    if (!m_.is_hermitian(kStateTol)) {
        throw Error(ErrorKind::NotHermitian, "density matrix is not Hermitian");
    }
    if (std::abs(m_.trace() - complex{1}) > kStateTol) {
        throw Error(ErrorKind::NotNormalized, "density matrix trace is not 1");
    }
    if (hermitian_eig(m_).eigenvalues.back() < -kStateTol) {
        throw Error(ErrorKind::InvalidChannel, "density matrix has a negative eigenvalue");
    }
}

KrausChannel::KrausChannel(std::vector<ComplexMatrix> ops) : dim_(0), ops_(std::move(ops)) {
    if (ops_.empty()) {
        throw Error(ErrorKind::InvalidChannel, "a Kraus channel needs at least one operator");
    }
    dim_ = ops_.front().dim();
    ComplexMatrix total(dim_);
    for (size_t k = 0; k < ops_.size(); k++) {
        if (ops_[k].dim() != dim_) {
            std::stringstream ss;
            ss << "Kraus operator " << k << " has dimension " << ops_[k].dim() << ", expected " << dim_;
            throw Error(ErrorKind::DimensionMismatch, ss.str());
        }
        total += ops_[k].adjoint() * ops_[k];
    }
    double deviation = total.max_abs_diff(ComplexMatrix::identity(dim_));
    if (deviation > kCompletenessTol) {
        std::stringstream ss;
        ss << "Kraus operators are not trace preserving (max |sum E^dagger E - I| = " << deviation << ")";
        throw Error(ErrorKind::InvalidChannel, ss.str());
    }
}

ComplexMatrix KrausChannel::apply(const ComplexMatrix &rho) const {
    if (rho.dim() != dim_) {
        throw Error(ErrorKind::DimensionMismatch, "operator dimension does not match the channel");
    }
    return conjugate_sum(ops_, rho);
}

ComplexMatrix KrausChannel::apply_extended(const ComplexMatrix &rho) const {
    if (rho.dim() != dim_ * dim_) {
        throw Error(ErrorKind::DimensionMismatch, "operator dimension does not match the extended channel");
    }
    auto id = ComplexMatrix::identity(dim_);
    ComplexMatrix out(rho.dim());
    for (const auto &e : ops_) {
        auto ext = kron(e, id);
        out += ext * rho * ext.adjoint();
    }
    return out;
}

ComplexMatrix KrausChannel::apply_to_pure(std::span<const complex> psi) const {
    size_t d = dim_;
    size_t ancilla;
    if (psi.size() == d) {
        ancilla = 1;
    } else if (psi.size() == d * d) {
        ancilla = d;
    } else {
        throw Error(ErrorKind::DimensionMismatch, "state length must be dim or dim^2");
    }
    size_t n = psi.size();
    ComplexMatrix out(n);
    StateVector image(n);
    for (const auto &e : ops_) {
        // (E (x) I) psi with psi indexed as (system * ancilla + a).
        for (size_t i = 0; i < d; i++) {
            for (size_t a = 0; a < ancilla; a++) {
                complex t = 0;
                for (size_t j = 0; j < d; j++) {
                    t += e(i, j) * psi[j * ancilla + a];
                }
                image[i * ancilla + a] = t;
            }
        }
        for (size_t r = 0; r < n; r++) {
            for (size_t c = 0; c < n; c++) {
                out(r, c) += image[r] * std::conj(image[c]);
            }
        }
    }
    return out;
}

AffineChannel::AffineChannel(const RealMatrix3 &m, const Vec3 &c) : m_(m), c_(c) {
    for (const auto &r : fibonacci_sphere(kBallSamples)) {
        double n = chandisc::norm(apply(r));
        if (!(n <= 1 + kBallSlack)) {
            std::stringstream ss;
            ss << "affine map sends a unit Bloch vector outside the ball (norm " << n << ")";
            throw Error(ErrorKind::InvalidChannel, ss.str());
        }
    }
}

Vec3 AffineChannel::apply(const Vec3 &r) const {
    return m_.apply(r) + c_;
}

GpcChannel::GpcChannel(size_t d, std::vector<double> q, std::vector<ComplexMatrix> basis)
    : d_(d), q_(std::move(q)), basis_(std::move(basis)) {
    if (d_ < 2) {
        throw Error(ErrorKind::UnsupportedDimension, "generalized Pauli channels need d >= 2");
    }
    size_t n = d_ * d_;
    if (q_.size() != n) {
        std::stringstream ss;
        ss << "expected " << n << " probabilities, got " << q_.size();
        throw Error(ErrorKind::InvalidDistribution, ss.str());
    }
    double total = 0;
    for (double x : q_) {
        if (!(x >= 0)) {
            throw Error(ErrorKind::InvalidDistribution, "probabilities must be nonnegative");
        }
        total += x;
    }
    if (std::abs(total - 1) > kDistributionTol) {
        std::stringstream ss;
        ss.precision(17);
        ss << "probabilities sum to " << total << ", not 1";
        throw Error(ErrorKind::InvalidDistribution, ss.str());
    }
    if (basis_.size() != n) {
        throw Error(ErrorKind::BasisMismatch, "basis must contain d^2 unitaries");
    }
    for (const auto &u : basis_) {
        if (u.dim() != d_) {
            throw Error(ErrorKind::DimensionMismatch, "basis element has the wrong dimension");
        }
        if (!u.is_unitary(kOrthogonalityTol)) {
            throw Error(ErrorKind::NotUnitary, "basis element is not unitary");
        }
    }
    for (size_t m = 0; m < n; m++) {
        auto um = basis_[m].adjoint();
        for (size_t k = m + 1; k < n; k++) {
            if (std::abs((um * basis_[k]).trace()) > kOrthogonalityTol) {
                throw Error(ErrorKind::BasisMismatch, "basis is not trace-orthogonal");
            }
        }
    }
}

GpcChannel GpcChannel::pauli(const std::array<double, 4> &q) {
    const auto &p = pauli_matrices();
    return GpcChannel(2, {q.begin(), q.end()}, {p.begin(), p.end()});
}

GpcChannel GpcChannel::weyl(size_t d, std::vector<double> q) {
    return GpcChannel(d, std::move(q), gpc_basis(d));
}

KrausChannel GpcChannel::to_kraus() const {
    std::vector<ComplexMatrix> ops;
    ops.reserve(q_.size());
    for (size_t k = 0; k < q_.size(); k++) {
        ops.push_back(complex{std::sqrt(q_[k])} * basis_[k]);
    }
    return KrausChannel(std::move(ops));
}

bool GpcChannel::has_pauli_basis() const {
    if (d_ != 2) {
        return false;
    }
    const auto &p = pauli_matrices();
    for (size_t k = 0; k < 4; k++) {
        if (basis_[k].max_abs_diff(p[k]) > kDistributionTol) {
            return false;
        }
    }
    return true;
}

bool GpcChannel::same_basis(const GpcChannel &other) const {
    if (d_ != other.d_) {
        return false;
    }
    for (size_t k = 0; k < basis_.size(); k++) {
        if (basis_[k].max_abs_diff(other.basis_[k]) > kDistributionTol) {
            return false;
        }
    }
    return true;
}

NamedChannel parse_channel_name(std::string_view name) {
    for (size_t k = 0; k < kChannelNames.size(); k++) {
        if (kChannelNames[k] == name) {
            return static_cast<NamedChannel>(k);
        }
    }
    throw Error(ErrorKind::UnknownName, "unknown channel name '" + std::string(name) + "'");
}

std::string_view channel_name(NamedChannel name) {
    return kChannelNames[static_cast<size_t>(name)];
}

const std::array<ComplexMatrix, 4> &pauli_matrices() {
    static const std::array<ComplexMatrix, 4> paulis = {
        ComplexMatrix{{1, 0}, {0, 1}},
        ComplexMatrix{{0, 1}, {1, 0}},
        ComplexMatrix{{0, complex{0, -1}}, {complex{0, 1}, 0}},
        ComplexMatrix{{1, 0}, {0, -1}},
    };
    return paulis;
}

DensityMatrix bloch_to_density(const BlochVector &bloch) {
    const auto &r = bloch.r();
    return DensityMatrix(ComplexMatrix{
        {0.5 * (1 + r[2]), 0.5 * complex{r[0], -r[1]}},
        {0.5 * complex{r[0], r[1]}, 0.5 * (1 - r[2])},
    });
}

BlochVector density_to_bloch(const DensityMatrix &rho) {
    if (rho.dim() != 2) {
        throw Error(ErrorKind::DimensionMismatch, "Bloch vectors exist only for 2x2 density matrices");
    }
    const auto &m = rho.matrix();
    return BlochVector({
        2 * m(0, 1).real(),
        -2 * m(0, 1).imag(),
        m(0, 0).real() - m(1, 1).real(),
    });
}

StateVector pure_state_from_bloch(const Vec3 &r) {
    if (std::abs(norm(r) - 1) > kStateTol) {
        throw Error(ErrorKind::NotNormalized, "pure states need a unit Bloch vector");
    }
    StateVector psi;
    if (r[2] >= 0) {
        double s = std::sqrt(2 * (1 + r[2]));
        psi = {complex{(1 + r[2]) / s}, complex{r[0], r[1]} / s};
    } else {
        double s = std::sqrt(2 * (1 - r[2]));
        psi = {complex{r[0], -r[1]} / s, complex{(1 - r[2]) / s}};
    }
    normalize_state(psi);
    return psi;
}

AffineChannel kraus_to_affine(const KrausChannel &ch) {
    if (ch.dim() != 2) {
        throw Error(ErrorKind::DimensionMismatch, "affine Bloch form exists only for qubit channels");
    }
    const auto &p = pauli_matrices();
    RealMatrix3 m;
    Vec3 c{};
    auto image_of_identity = conjugate_sum(ch.ops(), p[0]);
    for (size_t l = 0; l < 3; l++) {
        auto image = conjugate_sum(ch.ops(), p[l + 1]);
        for (size_t k = 0; k < 3; k++) {
            m(k, l) = 0.5 * (p[k + 1] * image).trace().real();
        }
    }
    for (size_t k = 0; k < 3; k++) {
        c[k] = 0.5 * (p[k + 1] * image_of_identity).trace().real();
    }
    return AffineChannel(m, c);
}

KrausChannel named_channel(NamedChannel name, double param) {
    if (!(param >= 0 && param <= 1)) {
        std::stringstream ss;
        ss << "parameter " << param << " is outside [0, 1]";
        throw Error(ErrorKind::ParamOutOfRange, ss.str());
    }
    const auto &p = pauli_matrices();
    auto scaled = [](double w, const ComplexMatrix &m) {
        return complex{std::sqrt(w)} * m;
    };
    switch (name) {
        case NamedChannel::BitFlip:
            return KrausChannel({scaled(param, p[0]), scaled(1 - param, p[1])});
        case NamedChannel::PhaseFlip:
            return KrausChannel({scaled(param, p[0]), scaled(1 - param, p[3])});
        case NamedChannel::BitPhaseFlip:
            return KrausChannel({scaled(param, p[0]), scaled(1 - param, p[2])});
        case NamedChannel::Depolarizing:
            return KrausChannel({
                scaled(1 - 0.75 * param, p[0]),
                scaled(0.25 * param, p[1]),
                scaled(0.25 * param, p[2]),
                scaled(0.25 * param, p[3]),
            });
        case NamedChannel::PhaseDamping:
            return KrausChannel({
                ComplexMatrix{{1, 0}, {0, std::sqrt(1 - param)}},
                ComplexMatrix{{0, 0}, {0, std::sqrt(param)}},
            });
        case NamedChannel::AmplitudeDamping:
            return KrausChannel({
                ComplexMatrix{{1, 0}, {0, std::sqrt(1 - param)}},
                ComplexMatrix{{0, std::sqrt(param)}, {0, 0}},
            });
    }
    throw Error(ErrorKind::UnknownName, "unknown channel");
}

KrausChannel named_channel(std::string_view name, double param) {
    return named_channel(parse_channel_name(name), param);
}

AffineChannel pauli_to_affine(const GpcChannel &g) {
    if (g.d() != 2) {
        throw Error(ErrorKind::DimensionMismatch, "Pauli channels act on a qubit");
    }
    if (!g.has_pauli_basis()) {
        throw Error(ErrorKind::BasisNotPauli, "basis is not (I, X, Y, Z)");
    }
    const auto &q = g.q();
    return AffineChannel(
        RealMatrix3::diag(2 * (q[0] + q[1]) - 1, 2 * (q[0] + q[2]) - 1, 2 * (q[0] + q[3]) - 1), {0, 0, 0});
}

std::vector<ComplexMatrix> gpc_basis(size_t d) {
    if (d < 2 || d > 4) {
        std::stringstream ss;
        ss << "generalized Pauli basis supports 2 <= d <= 4, got " << d;
        throw Error(ErrorKind::UnsupportedDimension, ss.str());
    }
    ComplexMatrix shift(d);
    ComplexMatrix clock(d);
    for (size_t k = 0; k < d; k++) {
        shift((k + 1) % d, k) = 1;
        clock(k, k) = std::polar(1.0, 2 * M_PI * static_cast<double>(k) / static_cast<double>(d));
    }
    std::vector<ComplexMatrix> basis;
    basis.reserve(d * d);
    auto shift_power = ComplexMatrix::identity(d);
    for (size_t a = 0; a < d; a++) {
        auto element = shift_power;
        for (size_t b = 0; b < d; b++) {
            basis.push_back(element);
            element = element * clock;
        }
        shift_power = shift_power * shift;
    }
    return basis;
}

std::vector<double> characteristic_vector(const GpcChannel &g) {
    std::vector<double> out;
    out.reserve(g.q().size());
    for (double x : g.q()) {
        out.push_back(std::sqrt(x));
    }
    return out;
}

}  // namespace chandisc

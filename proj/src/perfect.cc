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

#include <algorithm>
#include <cmath>
#include <sstream>

#include "chandisc/error.h"
#include "chandisc/rng.h"

namespace chandisc {

namespace {

constexpr double kUnitaryTol = 1e-9;
constexpr double kHullTol = 1e-10;
constexpr double kRankTol = 1e-10;
constexpr double kSphereTol = 1e-10;
constexpr double kOverlapTol = 1e-12;
constexpr double kSearchSuccess = 1e-16;
constexpr int kSearchIterations = 400;

double cross2(complex a, complex b) {
    return a.real() * b.imag() - a.imag() * b.real();
}

// <psi|K (x) I_a|psi> with psi indexed (system * a + ancilla).
complex extended_expectation(std::span<const complex> psi, const ComplexMatrix &k) {
    size_t d = k.dim();
    if (psi.size() == d) {
        return expectation(psi, k);
    }
    if (psi.size() != d * d) {
        throw Error(ErrorKind::DimensionMismatch, "state length must be dim or dim^2");
    }
    complex total = 0;
    for (size_t i = 0; i < d; i++) {
        for (size_t j = 0; j < d; j++) {
            complex kij = k(i, j);
            if (kij == complex{0}) {
                continue;
            }
            for (size_t a = 0; a < d; a++) {
                total += std::conj(psi[i * d + a]) * kij * psi[j * d + a];
            }
        }
    }
    return total;
}

PerfectVerdict with_certificate(Strategy strategy, Method method, StateVector psi,
                                std::span<const ComplexMatrix> ops) {
    normalize_state(psi);
    double residual = max_isotropy_residual(ops, psi);
    return {Verdict::Yes, strategy, std::move(psi), method, residual};
}

// Convex weights over at most three eigenvalues whose combination is 0.
std::optional<std::vector<std::pair<size_t, double>>> cancelling_weights(std::span<const complex> z) {
    size_t n = z.size();
    for (size_t k = 0; k < n; k++) {
        if (std::abs(z[k]) <= kHullTol) {
            return std::vector<std::pair<size_t, double>>{{k, 1.0}};
        }
    }
    for (size_t a = 0; a < n; a++) {
        for (size_t b = a + 1; b < n; b++) {
            complex ab = z[b] - z[a];
            double len2 = std::norm(ab);
            if (len2 == 0) {
                continue;
            }
            double t = -(z[a].real() * ab.real() + z[a].imag() * ab.imag()) / len2;
            if (t < 0 || t > 1) {
                continue;
            }
            if (std::abs(z[a] + t * ab) <= kHullTol) {
                return std::vector<std::pair<size_t, double>>{{a, 1 - t}, {b, t}};
            }
        }
    }
    for (size_t a = 0; a < n; a++) {
        for (size_t b = a + 1; b < n; b++) {
            for (size_t c = b + 1; c < n; c++) {
                double area = cross2(z[b] - z[a], z[c] - z[a]);
                if (std::abs(area) < 1e-14) {
                    continue;
                }
                double wa = cross2(z[b], z[c]) / area;
                double wb = cross2(z[c], z[a]) / area;
                double wc = cross2(z[a], z[b]) / area;
                double slack = -kHullTol / std::sqrt(std::abs(area));
                if (wa >= slack && wb >= slack && wc >= slack) {
                    wa = std::max(wa, 0.0);
                    wb = std::max(wb, 0.0);
                    wc = std::max(wc, 0.0);
                    double s = wa + wb + wc;
                    return std::vector<std::pair<size_t, double>>{{a, wa / s}, {b, wb / s}, {c, wc / s}};
                }
            }
        }
    }
    return std::nullopt;
}

struct SearchOutcome {
    double loss;
    StateVector psi;
};

// Levenberg-Marquardt on f_k(psi) = <psi|K_k|psi> / <psi|psi> over the real
// and imaginary parts of psi.
SearchOutcome levenberg_marquardt(const std::vector<ComplexMatrix> &ops, StateVector psi) {
    size_t n = psi.size();
    size_t m = ops.size();
    std::vector<ComplexMatrix> adjoints;
    adjoints.reserve(m);
    for (const auto &k : ops) {
        adjoints.push_back(k.adjoint());
    }

    auto loss_of = [&](const StateVector &v) {
        double denom = std::norm(norm(v));
        double total = 0;
        for (const auto &k : ops) {
            total += std::norm(expectation(v, k) / denom);
        }
        return total;
    };

    double damping = 1e-3;
    double loss = loss_of(psi);
    size_t vars = 2 * n;
    std::vector<double> jac(2 * m * vars);
    std::vector<double> res(2 * m);
    for (int it = 0; it < kSearchIterations && loss >= 1e-24; it++) {
        double denom = std::norm(norm(psi));
        for (size_t k = 0; k < m; k++) {
            auto kpsi = ops[k].apply(psi);
            auto kdpsi = adjoints[k].apply(psi);
            complex f = inner(psi, kpsi) / denom;
            res[2 * k] = f.real();
            res[2 * k + 1] = f.imag();
            for (size_t j = 0; j < n; j++) {
                complex dre = (kpsi[j] + std::conj(kdpsi[j]) - 2.0 * f * psi[j].real()) / denom;
                complex dim = (complex{0, -1} * kpsi[j] + complex{0, 1} * std::conj(kdpsi[j]) -
                               2.0 * f * psi[j].imag()) /
                              denom;
                jac[(2 * k) * vars + j] = dre.real();
                jac[(2 * k + 1) * vars + j] = dre.imag();
                jac[(2 * k) * vars + n + j] = dim.real();
                jac[(2 * k + 1) * vars + n + j] = dim.imag();
            }
        }
        std::vector<double> normal(vars * vars, 0.0);
        std::vector<double> grad(vars, 0.0);
        for (size_t row = 0; row < 2 * m; row++) {
            const double *jr = &jac[row * vars];
            for (size_t a = 0; a < vars; a++) {
                grad[a] += jr[a] * res[row];
                for (size_t b = 0; b < vars; b++) {
                    normal[a * vars + b] += jr[a] * jr[b];
                }
            }
        }

        bool improved = false;
        while (damping < 1e12) {
            auto system = normal;
            for (size_t a = 0; a < vars; a++) {
                system[a * vars + a] += damping;
            }
            auto step = solve_spd(vars, system, grad);
            StateVector trial(n);
            for (size_t j = 0; j < n; j++) {
                trial[j] = psi[j] - complex{step[j], step[n + j]};
            }
            double tn = norm(trial);
            for (auto &e : trial) {
                e /= tn;
            }
            double trial_loss = loss_of(trial);
            if (trial_loss < loss) {
                psi = std::move(trial);
                loss = trial_loss;
                damping = std::max(damping / 3, 1e-15);
                improved = true;
                break;
            }
            damping *= 4;
        }
        if (!improved) {
            break;
        }
    }
    return {loss, std::move(psi)};
}

}  // namespace

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Yes:
            return "yes";
        case Verdict::No:
            return "no";
        case Verdict::Unknown:
            return "unknown";
    }
    return "unknown";
}

std::string_view strategy_name(Strategy s) {
    return s == Strategy::Product ? "product" : "entangled";
}

std::string_view method_name(Method m) {
    switch (m) {
        case Method::UnitaryPolygon:
            return "unitary_polygon";
        case Method::GpcOrthogonality:
            return "gpc_orthogonality";
        case Method::QubitBlochExhaustion:
            return "qubit_bloch_exhaustion";
        case Method::NumericSearch:
            return "numeric_search";
    }
    return "numeric_search";
}

std::vector<ComplexMatrix> cross_operators(const KrausChannel &e1, const KrausChannel &e2) {
    if (e1.dim() != e2.dim()) {
        std::stringstream ss;
        ss << "channels act on different dimensions (" << e1.dim() << " vs " << e2.dim() << ")";
        throw Error(ErrorKind::DimensionMismatch, ss.str());
    }
    std::vector<ComplexMatrix> out;
    out.reserve(e1.ops().size() * e2.ops().size());
    for (const auto &a : e1.ops()) {
        auto a_dag = a.adjoint();
        for (const auto &b : e2.ops()) {
            out.push_back(a_dag * b);
        }
    }
    return out;
}

double max_isotropy_residual(std::span<const ComplexMatrix> ops, std::span<const complex> psi) {
    double worst = 0;
    for (const auto &k : ops) {
        worst = std::max(worst, std::abs(extended_expectation(psi, k)));
    }
    return worst;
}

PerfectVerdict unitary_perfect(const ComplexMatrix &u1, const ComplexMatrix &u2) {
    if (u1.dim() != u2.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "unitaries act on different dimensions");
    }
    if (!u1.is_unitary(kUnitaryTol) || !u2.is_unitary(kUnitaryTol)) {
        throw Error(ErrorKind::NotUnitary, "operator is not unitary within 1e-9");
    }
    ComplexMatrix w = u1.adjoint() * u2;
    std::vector<ComplexMatrix> ops{w};
    auto eig = normal_eig(w);
    if (!hull_contains_origin(eig.eigenvalues)) {
        return {Verdict::No, Strategy::Product, std::nullopt, Method::UnitaryPolygon, 0};
    }
    auto weights = cancelling_weights(eig.eigenvalues);
    if (!weights) {
        // The hull test and the weight search use the same tolerance, so this
        // only happens for points sitting exactly on the tolerance boundary.
        return {Verdict::Unknown, Strategy::Product, std::nullopt, Method::UnitaryPolygon, 0};
    }
    size_t n = w.dim();
    StateVector psi(n);
    for (const auto &[index, weight] : *weights) {
        double amp = std::sqrt(weight);
        for (size_t r = 0; r < n; r++) {
            psi[r] += amp * eig.eigenvectors(r, index);
        }
    }
    return with_certificate(Strategy::Product, Method::UnitaryPolygon, std::move(psi), ops);
}

PerfectVerdict gpc_perfect_entangled(const GpcChannel &g1, const GpcChannel &g2) {
    if (!g1.same_basis(g2)) {
        throw Error(ErrorKind::BasisMismatch, "channels must share dimension and unitary basis");
    }
    auto v1 = characteristic_vector(g1);
    auto v2 = characteristic_vector(g2);
    double overlap = 0;
    for (size_t k = 0; k < v1.size(); k++) {
        overlap += v1[k] * v2[k];
    }
    if (!(overlap < kOverlapTol)) {
        return {Verdict::No, Strategy::Entangled, std::nullopt, Method::GpcOrthogonality, 0};
    }
    size_t d = g1.d();
    StateVector psi(d * d);
    for (size_t k = 0; k < d; k++) {
        psi[k * d + k] = 1 / std::sqrt(static_cast<double>(d));
    }
    auto ops = cross_operators(g1.to_kraus(), g2.to_kraus());
    return with_certificate(Strategy::Entangled, Method::GpcOrthogonality, std::move(psi), ops);
}

PerfectVerdict qubit_product_perfect(const KrausChannel &e1, const KrausChannel &e2) {
    if (e1.dim() != 2 || e2.dim() != 2) {
        throw Error(ErrorKind::DimensionMismatch, "Bloch exhaustion needs qubit channels");
    }
    auto ops = cross_operators(e1, e2);
    const auto &p = pauli_matrices();

    // <psi|K|psi> = (Tr K + sum_k Tr(K sigma_k) r_k) / 2; one real row each for
    // the real and imaginary parts.
    size_t rows = 2 * ops.size();
    std::vector<double> a(rows * 3);
    std::vector<double> rhs(rows);
    for (size_t i = 0; i < ops.size(); i++) {
        complex t = ops[i].trace();
        rhs[2 * i] = -t.real();
        rhs[2 * i + 1] = -t.imag();
        for (size_t k = 0; k < 3; k++) {
            complex coeff = (ops[i] * p[k + 1]).trace();
            a[(2 * i) * 3 + k] = coeff.real();
            a[(2 * i + 1) * 3 + k] = coeff.imag();
        }
    }
    auto svd = real_svd(rows, 3, a);
    size_t rank = 0;
    while (rank < 3 && svd.singular_values[rank] > kRankTol) {
        rank++;
    }

    // Minimum-norm solution, then a consistency check of the full system.
    Vec3 r0{};
    for (size_t k = 0; k < rank; k++) {
        double proj = 0;
        for (size_t row = 0; row < rows; row++) {
            proj += svd.u[row * 3 + k] * rhs[row];
        }
        proj /= svd.singular_values[k];
        for (size_t c = 0; c < 3; c++) {
            r0[c] += proj * svd.v[c * 3 + k];
        }
    }
    double misfit = 0;
    double rhs_norm = 0;
    for (size_t row = 0; row < rows; row++) {
        double t = -rhs[row];
        for (size_t c = 0; c < 3; c++) {
            t += a[row * 3 + c] * r0[c];
        }
        misfit += t * t;
        rhs_norm += rhs[row] * rhs[row];
    }
    auto no = PerfectVerdict{Verdict::No, Strategy::Product, std::nullopt, Method::QubitBlochExhaustion, 0};
    if (std::sqrt(misfit) > kSphereTol * std::max(1.0, std::sqrt(rhs_norm))) {
        return no;
    }

    double base = norm(r0);
    Vec3 r;
    if (rank == 3) {
        if (std::abs(base - 1) > kSphereTol) {
            return no;
        }
        r = (1 / base) * r0;
    } else {
        if (base > 1 + kSphereTol) {
            return no;
        }
        Vec3 free_dir{svd.v[0 * 3 + rank], svd.v[1 * 3 + rank], svd.v[2 * 3 + rank]};
        r = r0 + std::sqrt(std::max(0.0, 1 - base * base)) * free_dir;
        r = (1 / norm(r)) * r;
    }
    return with_certificate(Strategy::Product, Method::QubitBlochExhaustion, pure_state_from_bloch(r), ops);
}

PerfectVerdict numeric_isotropic_search(std::span<const ComplexMatrix> ops, bool entangled, uint64_t seed,
                                        size_t restarts) {
    if (ops.empty()) {
        throw Error(ErrorKind::InvalidChannel, "no operators to search over");
    }
    if (restarts < 1) {
        throw Error(ErrorKind::ParamOutOfRange, "restarts must be at least 1");
    }
    size_t d = ops.front().dim();
    std::vector<ComplexMatrix> work;
    work.reserve(ops.size());
    for (const auto &k : ops) {
        if (k.dim() != d) {
            throw Error(ErrorKind::DimensionMismatch, "operators must share a dimension");
        }
        work.push_back(entangled ? kron(k, ComplexMatrix::identity(d)) : k);
    }
    Strategy strategy = entangled ? Strategy::Entangled : Strategy::Product;
    size_t n = entangled ? d * d : d;

    for (size_t attempt = 0; attempt < restarts; attempt++) {
        CounterRng rng(seed, attempt);
        StateVector start(n);
        for (auto &e : start) {
            e = rng.complex_normal();
        }
        auto outcome = levenberg_marquardt(work, std::move(start));
        if (outcome.loss < kSearchSuccess) {
            return with_certificate(strategy, Method::NumericSearch, std::move(outcome.psi), ops);
        }
    }
    return {Verdict::Unknown, strategy, std::nullopt, Method::NumericSearch, 0};
}

}  // namespace chandisc

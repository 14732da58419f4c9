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

#include "chandisc/linalg.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "chandisc/error.h"

namespace chandisc {

namespace {

constexpr double kHermitianTol = 1e-9;
constexpr double kJacobiTol = 1e-12;
constexpr int kMaxSweeps = 100;
constexpr double kHullTol = 1e-10;
constexpr double kDedupTol = 1e-12;
constexpr double kPhaseTol = 1e-12;

void require_same_dim(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim() != b.dim()) {
        std::stringstream ss;
        ss << "matrix dimensions differ: " << a.dim() << " vs " << b.dim();
        throw Error(ErrorKind::DimensionMismatch, ss.str());
    }
}

double cross(complex a, complex b) {
    return a.real() * b.imag() - a.imag() * b.real();
}

// Multiplies each column so that its first component of magnitude above
// kPhaseTol is real positive.
void fix_column_phases(ComplexMatrix &v) {
    size_t n = v.dim();
    for (size_t col = 0; col < n; col++) {
        for (size_t row = 0; row < n; row++) {
            double mag = std::abs(v(row, col));
            if (mag > kPhaseTol) {
                complex phase = std::conj(v(row, col)) / mag;
                for (size_t k = 0; k < n; k++) {
                    v(k, col) *= phase;
                }
                v(row, col) = mag;
                break;
            }
        }
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(size_t dim) : dim_(dim), entries_(dim * dim) {
    if (dim == 0) {
        throw Error(ErrorKind::DimensionMismatch, "matrix dimension must be at least 1");
    }
}

ComplexMatrix::ComplexMatrix(size_t dim, std::vector<complex> entries) : dim_(dim), entries_(std::move(entries)) {
    if (dim == 0 || entries_.size() != dim * dim) {
        std::stringstream ss;
        ss << "expected " << dim * dim << " entries for a " << dim << "x" << dim << " matrix, got "
           << entries_.size();
        throw Error(ErrorKind::DimensionMismatch, ss.str());
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<complex>> rows) : dim_(rows.size()) {
    if (dim_ == 0) {
        throw Error(ErrorKind::DimensionMismatch, "matrix dimension must be at least 1");
    }
    entries_.reserve(dim_ * dim_);
    for (const auto &row : rows) {
        if (row.size() != dim_) {
            throw Error(ErrorKind::DimensionMismatch, "matrix rows must all have length equal to the row count");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(size_t dim) {
    ComplexMatrix m(dim);
    for (size_t k = 0; k < dim; k++) {
        m(k, k) = 1;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const complex> values) {
    ComplexMatrix m(values.size());
    for (size_t k = 0; k < values.size(); k++) {
        m(k, k) = values[k];
    }
    return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const complex> psi) {
    ComplexMatrix m(psi.size());
    for (size_t r = 0; r < psi.size(); r++) {
        for (size_t c = 0; c < psi.size(); c++) {
            m(r, c) = psi[r] * std::conj(psi[c]);
        }
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(dim_);
    for (size_t r = 0; r < dim_; r++) {
        for (size_t c = 0; c < dim_; c++) {
            m(c, r) = std::conj((*this)(r, c));
        }
    }
    return m;
}

complex ComplexMatrix::trace() const {
    complex t = 0;
    for (size_t k = 0; k < dim_; k++) {
        t += (*this)(k, k);
    }
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double t = 0;
    for (const auto &e : entries_) {
        t += std::norm(e);
    }
    return std::sqrt(t);
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix &other) const {
    require_same_dim(*this, other);
    double worst = 0;
    for (size_t k = 0; k < entries_.size(); k++) {
        worst = std::max(worst, std::abs(entries_[k] - other.entries_[k]));
    }
    return worst;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    return max_abs_diff(adjoint()) <= tol;
}

bool ComplexMatrix::is_unitary(double tol) const {
    return (adjoint() * *this).max_abs_diff(identity(dim_)) <= tol;
}

StateVector ComplexMatrix::apply(std::span<const complex> v) const {
    if (v.size() != dim_) {
        throw Error(ErrorKind::DimensionMismatch, "vector length does not match matrix dimension");
    }
    StateVector out(dim_);
    for (size_t r = 0; r < dim_; r++) {
        complex t = 0;
        for (size_t c = 0; c < dim_; c++) {
            t += (*this)(r, c) * v[c];
        }
        out[r] = t;
    }
    return out;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    require_same_dim(*this, other);
    for (size_t k = 0; k < entries_.size(); k++) {
        entries_[k] += other.entries_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    require_same_dim(*this, other);
    for (size_t k = 0; k < entries_.size(); k++) {
        entries_[k] -= other.entries_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(complex scale) {
    for (auto &e : entries_) {
        e *= scale;
    }
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
    a += b;
    return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
    a -= b;
    return a;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b);
    size_t n = a.dim();
    ComplexMatrix out(n);
    for (size_t r = 0; r < n; r++) {
        for (size_t k = 0; k < n; k++) {
            complex ark = a(r, k);
            if (ark == complex{0}) {
                continue;
            }
            for (size_t c = 0; c < n; c++) {
                out(r, c) += ark * b(k, c);
            }
        }
    }
    return out;
}

ComplexMatrix operator*(complex scale, ComplexMatrix a) {
    a *= scale;
    return a;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    size_t na = a.dim();
    size_t nb = b.dim();
    ComplexMatrix out(na * nb);
    for (size_t i = 0; i < na; i++) {
        for (size_t j = 0; j < na; j++) {
            for (size_t k = 0; k < nb; k++) {
                for (size_t l = 0; l < nb; l++) {
                    out(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return out;
}

complex inner(std::span<const complex> a, std::span<const complex> b) {
    if (a.size() != b.size()) {
        throw Error(ErrorKind::DimensionMismatch, "vector lengths differ");
    }
    complex t = 0;
    for (size_t k = 0; k < a.size(); k++) {
        t += std::conj(a[k]) * b[k];
    }
    return t;
}

double norm(std::span<const complex> v) {
    double t = 0;
    for (const auto &e : v) {
        t += std::norm(e);
    }
    return std::sqrt(t);
}

complex expectation(std::span<const complex> psi, const ComplexMatrix &op) {
    auto applied = op.apply(psi);
    return inner(psi, applied);
}

void normalize_state(StateVector &psi) {
    double n = norm(psi);
    if (n == 0) {
        throw Error(ErrorKind::NotNormalized, "cannot normalize the zero vector");
    }
    size_t best = 0;
    for (size_t k = 1; k < psi.size(); k++) {
        if (std::abs(psi[k]) > std::abs(psi[best]) * (1 + 1e-12)) {
            best = k;
        }
    }
    complex phase = std::conj(psi[best]) / std::abs(psi[best]) / n;
    for (auto &e : psi) {
        e *= phase;
    }
    psi[best] = psi[best].real();
}

RealMatrix3 RealMatrix3::identity() {
    return diag(1, 1, 1);
}

RealMatrix3 RealMatrix3::diag(double x, double y, double z) {
    RealMatrix3 m;
    m(0, 0) = x;
    m(1, 1) = y;
    m(2, 2) = z;
    return m;
}

RealMatrix3 RealMatrix3::transpose() const {
    RealMatrix3 t;
    for (size_t r = 0; r < 3; r++) {
        for (size_t c = 0; c < 3; c++) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

Vec3 RealMatrix3::apply(const Vec3 &v) const {
    Vec3 out{};
    for (size_t r = 0; r < 3; r++) {
        out[r] = a[r * 3] * v[0] + a[r * 3 + 1] * v[1] + a[r * 3 + 2] * v[2];
    }
    return out;
}

RealMatrix3 operator*(const RealMatrix3 &a, const RealMatrix3 &b) {
    RealMatrix3 out;
    for (size_t r = 0; r < 3; r++) {
        for (size_t c = 0; c < 3; c++) {
            out(r, c) = a(r, 0) * b(0, c) + a(r, 1) * b(1, c) + a(r, 2) * b(2, c);
        }
    }
    return out;
}

RealMatrix3 operator+(const RealMatrix3 &a, const RealMatrix3 &b) {
    RealMatrix3 out;
    for (size_t k = 0; k < 9; k++) {
        out.a[k] = a.a[k] + b.a[k];
    }
    return out;
}

RealMatrix3 operator-(const RealMatrix3 &a, const RealMatrix3 &b) {
    RealMatrix3 out;
    for (size_t k = 0; k < 9; k++) {
        out.a[k] = a.a[k] - b.a[k];
    }
    return out;
}

RealMatrix3 operator*(double s, const RealMatrix3 &m) {
    RealMatrix3 out;
    for (size_t k = 0; k < 9; k++) {
        out.a[k] = s * m.a[k];
    }
    return out;
}

Vec3 operator+(const Vec3 &a, const Vec3 &b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

Vec3 operator-(const Vec3 &a, const Vec3 &b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

Vec3 operator*(double s, const Vec3 &v) {
    return {s * v[0], s * v[1], s * v[2]};
}

double dot(const Vec3 &a, const Vec3 &b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

double norm(const Vec3 &v) {
    return std::sqrt(dot(v, v));
}

EigenResult hermitian_eig(const ComplexMatrix &input) {
    size_t n = input.dim();
    double deviation = input.max_abs_diff(input.adjoint());
    if (deviation > kHermitianTol) {
        std::stringstream ss;
        ss << "matrix is not Hermitian (max |a - a^dagger| = " << deviation << ")";
        throw Error(ErrorKind::NotHermitian, ss.str());
    }

    ComplexMatrix a(n);
    for (size_t r = 0; r < n; r++) {
        for (size_t c = 0; c < n; c++) {
            a(r, c) = 0.5 * (input(r, c) + std::conj(input(c, r)));
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);
    double threshold = kJacobiTol * std::max(1.0, a.frobenius_norm());

    for (int sweep = 0; sweep < kMaxSweeps; sweep++) {
        double off = 0;
        for (size_t r = 0; r < n; r++) {
            for (size_t c = 0; c < n; c++) {
                if (r != c) {
                    off += std::norm(a(r, c));
                }
            }
        }
        if (std::sqrt(off) < threshold) {
            break;
        }
        for (size_t p = 0; p + 1 < n; p++) {
            for (size_t q = p + 1; q < n; q++) {
                double b = std::abs(a(p, q));
                if (b == 0) {
                    continue;
                }
                // G = diag(1, conj(e)) * [[c, s], [-s, c]] on the (p, q) plane
                // reduces the pair to a real symmetric rotation.
                complex e = a(p, q) / b;
                complex ec = std::conj(e);
                double theta = (a(p, p).real() - a(q, q).real()) / (2 * b);
                double t = (theta >= 0 ? -1.0 : 1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                double cs = 1 / std::sqrt(1 + t * t);
                double sn = t * cs;

                for (size_t k = 0; k < n; k++) {
                    complex akp = a(k, p);
                    complex akq = a(k, q);
                    a(k, p) = akp * cs - akq * sn * ec;
                    a(k, q) = akp * sn + akq * cs * ec;
                }
                for (size_t k = 0; k < n; k++) {
                    complex apk = a(p, k);
                    complex aqk = a(q, k);
                    a(p, k) = cs * apk - sn * e * aqk;
                    a(q, k) = sn * apk + cs * e * aqk;
                }
                a(p, q) = 0;
                a(q, p) = 0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                for (size_t k = 0; k < n; k++) {
                    complex vkp = v(k, p);
                    complex vkq = v(k, q);
                    v(k, p) = vkp * cs - vkq * sn * ec;
                    v(k, q) = vkp * sn + vkq * cs * ec;
                }
            }
        }
    }

    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
        return a(x, x).real() > a(y, y).real();
    });

    EigenResult result{std::vector<double>(n), ComplexMatrix(n)};
    for (size_t k = 0; k < n; k++) {
        result.eigenvalues[k] = a(order[k], order[k]).real();
        for (size_t r = 0; r < n; r++) {
            result.eigenvectors(r, k) = v(r, order[k]);
        }
    }
    fix_column_phases(result.eigenvectors);
    return result;
}

double trace_norm_hermitian(const ComplexMatrix &a) {
    double total = 0;
    for (double lambda : hermitian_eig(a).eigenvalues) {
        total += std::abs(lambda);
    }
    return total;
}

double spectral_norm(const RealMatrix3 &m) {
    RealMatrix3 gram = m.transpose() * m;
    ComplexMatrix g(3);
    for (size_t r = 0; r < 3; r++) {
        for (size_t c = 0; c < 3; c++) {
            g(r, c) = gram(r, c);
        }
    }
    double top = hermitian_eig(g).eigenvalues[0];
    return std::sqrt(std::max(top, 0.0));
}

bool hull_contains_origin(std::span<const complex> points) {
    std::vector<complex> pts;
    for (const auto &p : points) {
        bool duplicate = std::any_of(pts.begin(), pts.end(), [&](complex q) {
            return std::abs(p - q) < kDedupTol;
        });
        if (!duplicate) {
            pts.push_back(p);
        }
    }
    if (pts.empty()) {
        return false;
    }
    if (pts.size() == 1) {
        return std::abs(pts[0]) <= kHullTol;
    }

    std::sort(pts.begin(), pts.end(), [](complex x, complex y) {
        return x.real() < y.real() || (x.real() == y.real() && x.imag() < y.imag());
    });
    // Andrew's monotone chain, dropping collinear points.
    std::vector<complex> hull(2 * pts.size());
    size_t k = 0;
    for (size_t i = 0; i < pts.size(); i++) {
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) {
            k--;
        }
        hull[k++] = pts[i];
    }
    for (size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) {
            k--;
        }
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);

    if (hull.size() <= 2) {
        complex a = hull.front();
        complex b = hull.back();
        complex ab = b - a;
        double len2 = std::norm(ab);
        double t = len2 == 0 ? 0 : std::clamp(-(a.real() * ab.real() + a.imag() * ab.imag()) / len2, 0.0, 1.0);
        return std::abs(a + t * ab) <= kHullTol;
    }
    for (size_t i = 0; i < hull.size(); i++) {
        complex a = hull[i];
        complex b = hull[(i + 1) % hull.size()];
        double signed_distance = cross(b - a, -a) / std::abs(b - a);
        if (signed_distance < -kHullTol) {
            return false;
        }
    }
    return true;
}

NormalEigenResult normal_eig(const ComplexMatrix &a) {
    size_t n = a.dim();
    ComplexMatrix adj = a.adjoint();
    ComplexMatrix re_part = 0.5 * (a + adj);
    ComplexMatrix im_part = complex{0, -0.5} * (a - adj);

    // Diagonalize the Hermitian part, then split each degenerate cluster with
    // the anti-Hermitian part (the two commute for normal input).
    auto eig = hermitian_eig(re_part);
    ComplexMatrix q = eig.eigenvectors;
    size_t start = 0;
    while (start < n) {
        size_t stop = start + 1;
        while (stop < n && eig.eigenvalues[stop - 1] - eig.eigenvalues[stop] < 1e-9) {
            stop++;
        }
        size_t k = stop - start;
        if (k > 1) {
            ComplexMatrix block(k);
            for (size_t i = 0; i < k; i++) {
                for (size_t j = 0; j < k; j++) {
                    complex t = 0;
                    for (size_t r = 0; r < n; r++) {
                        for (size_t c = 0; c < n; c++) {
                            t += std::conj(q(r, start + i)) * im_part(r, c) * q(c, start + j);
                        }
                    }
                    block(i, j) = t;
                }
            }
            auto sub = hermitian_eig(block);
            ComplexMatrix rotated(n);
            for (size_t r = 0; r < n; r++) {
                for (size_t j = 0; j < k; j++) {
                    complex t = 0;
                    for (size_t i = 0; i < k; i++) {
                        t += q(r, start + i) * sub.eigenvectors(i, j);
                    }
                    rotated(r, j) = t;
                }
            }
            for (size_t r = 0; r < n; r++) {
                for (size_t j = 0; j < k; j++) {
                    q(r, start + j) = rotated(r, j);
                }
            }
        }
        start = stop;
    }

    NormalEigenResult result{std::vector<complex>(n), q};
    for (size_t k = 0; k < n; k++) {
        StateVector col(n);
        for (size_t r = 0; r < n; r++) {
            col[r] = q(r, k);
        }
        result.eigenvalues[k] = expectation(col, a);
    }
    return result;
}

RealSvd real_svd(size_t rows, size_t cols, std::span<const double> data) {
    if (data.size() != rows * cols || cols == 0) {
        throw Error(ErrorKind::DimensionMismatch, "real_svd: data size does not match shape");
    }
    std::vector<double> b(data.begin(), data.end());
    std::vector<double> v(cols * cols, 0.0);
    for (size_t k = 0; k < cols; k++) {
        v[k * cols + k] = 1;
    }
    auto col_dot = [&](size_t i, size_t j) {
        double t = 0;
        for (size_t r = 0; r < rows; r++) {
            t += b[r * cols + i] * b[r * cols + j];
        }
        return t;
    };
    for (int sweep = 0; sweep < kMaxSweeps; sweep++) {
        bool rotated = false;
        for (size_t i = 0; i + 1 < cols; i++) {
            for (size_t j = i + 1; j < cols; j++) {
                double alpha = col_dot(i, i);
                double beta = col_dot(j, j);
                double gamma = col_dot(i, j);
                if (std::abs(gamma) <= 1e-15 * std::sqrt(alpha * beta) || gamma == 0) {
                    continue;
                }
                rotated = true;
                double zeta = (beta - alpha) / (2 * gamma);
                double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1 + zeta * zeta));
                double cs = 1 / std::sqrt(1 + t * t);
                double sn = cs * t;
                for (size_t r = 0; r < rows; r++) {
                    double x = b[r * cols + i];
                    double y = b[r * cols + j];
                    b[r * cols + i] = cs * x - sn * y;
                    b[r * cols + j] = sn * x + cs * y;
                }
                for (size_t r = 0; r < cols; r++) {
                    double x = v[r * cols + i];
                    double y = v[r * cols + j];
                    v[r * cols + i] = cs * x - sn * y;
                    v[r * cols + j] = sn * x + cs * y;
                }
            }
        }
        if (!rotated) {
            break;
        }
    }

    std::vector<double> sigma(cols);
    for (size_t k = 0; k < cols; k++) {
        sigma[k] = std::sqrt(col_dot(k, k));
    }
    std::vector<size_t> order(cols);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
        return sigma[x] > sigma[y];
    });

    RealSvd out{rows, cols, std::vector<double>(cols), std::vector<double>(rows * cols, 0.0),
                std::vector<double>(cols * cols)};
    for (size_t k = 0; k < cols; k++) {
        size_t src = order[k];
        out.singular_values[k] = sigma[src];
        for (size_t r = 0; r < cols; r++) {
            out.v[r * cols + k] = v[r * cols + src];
        }
        if (sigma[src] > 0) {
            for (size_t r = 0; r < rows; r++) {
                out.u[r * cols + k] = b[r * cols + src] / sigma[src];
            }
        }
    }
    return out;
}

std::vector<double> solve_spd(size_t n, std::vector<double> a, std::vector<double> b) {
    if (a.size() != n * n || b.size() != n) {
        throw Error(ErrorKind::DimensionMismatch, "solve_spd: shape mismatch");
    }
    // In-place Cholesky, lower triangle.
    for (size_t j = 0; j < n; j++) {
        double d = a[j * n + j];
        for (size_t k = 0; k < j; k++) {
            d -= a[j * n + k] * a[j * n + k];
        }
        if (d <= 0) {
            throw Error(ErrorKind::InvalidChannel, "solve_spd: matrix is not positive definite");
        }
        d = std::sqrt(d);
        a[j * n + j] = d;
        for (size_t i = j + 1; i < n; i++) {
            double s = a[i * n + j];
            for (size_t k = 0; k < j; k++) {
                s -= a[i * n + k] * a[j * n + k];
            }
            a[i * n + j] = s / d;
        }
    }
    for (size_t i = 0; i < n; i++) {
        double s = b[i];
        for (size_t k = 0; k < i; k++) {
            s -= a[i * n + k] * b[k];
        }
        b[i] = s / a[i * n + i];
    }
    for (size_t i = n; i-- > 0;) {
        double s = b[i];
        for (size_t k = i + 1; k < n; k++) {
            s -= a[k * n + i] * b[k];
        }
        b[i] = s / a[i * n + i];
    }
    return b;
}

std::vector<Vec3> fibonacci_sphere(size_t n) {
    const double golden_angle = M_PI * (3 - std::sqrt(5.0));
    std::vector<Vec3> out;
    out.reserve(n);
    for (size_t i = 0; i < n; i++) {
        double z = 1 - (2.0 * static_cast<double>(i) + 1) / static_cast<double>(n);
        double radius = std::sqrt(std::max(0.0, 1 - z * z));
        double phi = golden_angle * static_cast<double>(i);
        out.push_back({radius * std::cos(phi), radius * std::sin(phi), z});
    }
    return out;
}

}  // namespace chandisc

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

#ifndef CHANDISC_LINALG_H
#define CHANDISC_LINALG_H

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace chandisc {

using complex = std::complex<double>;
using Vec3 = std::array<double, 3>;
using StateVector = std::vector<complex>;

/// Square dense complex matrix stored row-major.
class ComplexMatrix {
   public:
    /// Zero matrix of the given dimension (dim >= 1).
    explicit ComplexMatrix(size_t dim);
    /// Takes ownership of dim*dim row-major entries.
    ComplexMatrix(size_t dim, std::vector<complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<complex>> rows);

    static ComplexMatrix identity(size_t dim);
    static ComplexMatrix diagonal(std::span<const complex> values);
    /// |psi><psi|.
    static ComplexMatrix outer(std::span<const complex> psi);

    size_t dim() const noexcept {
        return dim_;
    }
    complex &operator()(size_t row, size_t col) {
        return entries_[row * dim_ + col];
    }
    const complex &operator()(size_t row, size_t col) const {
        return entries_[row * dim_ + col];
    }
    std::span<const complex> entries() const noexcept {
        return entries_;
    }

    ComplexMatrix adjoint() const;
    complex trace() const;
    double frobenius_norm() const;
    /// Largest entrywise |a - b|.
    double max_abs_diff(const ComplexMatrix &other) const;
    bool is_hermitian(double tol) const;
    bool is_unitary(double tol) const;

    StateVector apply(std::span<const complex> v) const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(complex scale);

   private:
    size_t dim_;
    std::vector<complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator*(complex scale, ComplexMatrix a);
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// <a|b>, conjugating the left argument.
complex inner(std::span<const complex> a, std::span<const complex> b);
double norm(std::span<const complex> v);
/// <psi|op|psi>.
complex expectation(std::span<const complex> psi, const ComplexMatrix &op);
/// Rescales to unit norm and rotates the global phase so the first entry
/// of largest magnitude is real positive.
void normalize_state(StateVector &psi);

/// Real 3x3 matrix, row-major.
struct RealMatrix3 {
    std::array<double, 9> a{};

    static RealMatrix3 identity();
    static RealMatrix3 diag(double x, double y, double z);

    double &operator()(size_t row, size_t col) {
        return a[row * 3 + col];
    }
    double operator()(size_t row, size_t col) const {
        return a[row * 3 + col];
    }
    RealMatrix3 transpose() const;
    Vec3 apply(const Vec3 &v) const;
    bool operator==(const RealMatrix3 &other) const = default;
};

RealMatrix3 operator*(const RealMatrix3 &a, const RealMatrix3 &b);
RealMatrix3 operator+(const RealMatrix3 &a, const RealMatrix3 &b);
RealMatrix3 operator-(const RealMatrix3 &a, const RealMatrix3 &b);
RealMatrix3 operator*(double s, const RealMatrix3 &m);

Vec3 operator+(const Vec3 &a, const Vec3 &b);
Vec3 operator-(const Vec3 &a, const Vec3 &b);
Vec3 operator*(double s, const Vec3 &v);
double dot(const Vec3 &a, const Vec3 &b);
double norm(const Vec3 &v);

struct EigenResult {
    /// Sorted descending.
    std::vector<double> eigenvalues;
    /// Column k is the eigenvector of eigenvalues[k].
    ComplexMatrix eigenvectors;
};

/// Cyclic complex Jacobi eigendecomposition of a Hermitian matrix.
///
/// The input must be Hermitian to within 1e-9 (largest entry of a - a^dagger),
/// otherwise Error(NotHermitian) is thrown. Each eigenvector is phased so its
/// first component with magnitude above 1e-12 is real positive, which makes
/// the output reproducible.
EigenResult hermitian_eig(const ComplexMatrix &a);

/// Sum of |eigenvalue| for a Hermitian matrix.
double trace_norm_hermitian(const ComplexMatrix &a);

/// Largest singular value.
double spectral_norm(const RealMatrix3 &m);

/// Whether 0 lies in the convex hull of the points (boundary included, with a
/// 1e-10 tolerance on signed distances).
bool hull_contains_origin(std::span<const complex> points);

/// Eigendecomposition of a normal (e.g. unitary) matrix. Eigenvalues are in no
/// particular order; eigenvectors are orthonormal columns.
struct NormalEigenResult {
    std::vector<complex> eigenvalues;
    ComplexMatrix eigenvectors;
};
NormalEigenResult normal_eig(const ComplexMatrix &a);

/// Thin SVD of a real rows x cols matrix (row-major), by one-sided Jacobi.
struct RealSvd {
    size_t rows;
    size_t cols;
    /// Sorted descending, length cols.
    std::vector<double> singular_values;
    /// rows x cols, column k is the left vector for singular_values[k] (zero
    /// column when the singular value is zero).
    std::vector<double> u;
    /// cols x cols, column k is the right vector for singular_values[k].
    std::vector<double> v;
};
RealSvd real_svd(size_t rows, size_t cols, std::span<const double> data);

/// Solves (a) x = b for symmetric positive definite a (n x n, row-major).
std::vector<double> solve_spd(size_t n, std::vector<double> a, std::vector<double> b);

/// n deterministic, nearly uniform points on the unit sphere.
std::vector<Vec3> fibonacci_sphere(size_t n);

}  // namespace chandisc

#endif

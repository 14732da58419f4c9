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

#include "chandisc/sphereopt.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "chandisc/error.h"

namespace chandisc {

namespace {

constexpr double kHardCaseTol = 1e-12;
constexpr double kDegenerateTol = 1e-10;
constexpr double kSecularTol = 1e-13;
constexpr double kBracketTol = 1e-15;
constexpr double kSignTol = 1e-12;
constexpr int kMaxSecularIterations = 500;
constexpr int kRefineSteps = 20;
constexpr double kRunnerUpAngle = 0.5;

struct SecularTerms {
    std::vector<double> d;
    std::vector<double> b2;
};

double secular(const SecularTerms &t, double lambda) {
    double s = 0;
    for (size_t i = 0; i < t.d.size(); i++) {
        double gap = lambda - t.d[i];
        s += t.b2[i] / (gap * gap);
    }
    return s;
}

double secular_slope(const SecularTerms &t, double lambda) {
    double s = 0;
    for (size_t i = 0; i < t.d.size(); i++) {
        double gap = lambda - t.d[i];
        s -= 2 * t.b2[i] / (gap * gap * gap);
    }
    return s;
}

// Root of secular(lambda) = 1 on (lo, hi]; the function is decreasing there.
double solve_secular(const SecularTerms &t, double lo, double hi) {
    double lambda = hi;
    for (int it = 0; it < kMaxSecularIterations; it++) {
        double residual = secular(t, lambda) - 1;
        if (std::abs(residual) < kSecularTol) {
            break;
        }
        if (residual > 0) {
            lo = lambda;
        } else {
            hi = lambda;
        }
        if (hi - lo < kBracketTol * std::max(1.0, std::abs(lambda))) {
            break;
        }
        double slope = secular_slope(t, lambda);
        double next = slope != 0 ? lambda - residual / slope : lo;
        lambda = (next > lo && next < hi) ? next : 0.5 * (lo + hi);
    }
    return lambda;
}

// First component with magnitude above kSignTol made positive.
Vec3 canonical_sign(Vec3 v) {
    for (double x : v) {
        if (std::abs(x) > kSignTol) {
            if (x < 0) {
                v = -1.0 * v;
            }
            break;
        }
    }
    return v;
}

double objective(const RealMatrix3 &m, const Vec3 &c, const Vec3 &r) {
    return norm(m.apply(r) + c);
}

// Maximizes ||cos(t) a + sin(t) b + c|| over t in [-pi, pi].
double best_angle(const Vec3 &a, const Vec3 &b, const Vec3 &c) {
    auto f = [&](double t) {
        return norm(std::cos(t) * a + std::sin(t) * b + c);
    };
    constexpr int samples = 64;
    const double step = 2 * M_PI / samples;
    double best_t = 0;
    double best_f = f(0);
    for (int k = 1; k < samples; k++) {
        double t = -M_PI + step * k;
        double v = f(t);
        if (v > best_f) {
            best_f = v;
            best_t = t;
        }
    }
    // Golden-section refinement on the bracketing interval.
    const double inv_phi = (std::sqrt(5.0) - 1) / 2;
    double lo = best_t - step;
    double hi = best_t + step;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int it = 0; it < 80; it++) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        }
    }
    double t = 0.5 * (lo + hi);
    return f(t) >= best_f ? t : best_t;
}

}  // namespace

SphereMaxResult maximize_on_sphere(const RealMatrix3 &m, const Vec3 &c) {
    RealMatrix3 mt = m.transpose();
    RealMatrix3 gram = mt * m;
    Vec3 mtc = mt.apply(c);

    ComplexMatrix g(3);
    for (size_t r = 0; r < 3; r++) {
        for (size_t k = 0; k < 3; k++) {
            g(r, k) = gram(r, k);
        }
    }
    auto eig = hermitian_eig(g);
    std::array<Vec3, 3> q{};
    for (size_t k = 0; k < 3; k++) {
        q[k] = {eig.eigenvectors(0, k).real(), eig.eigenvectors(1, k).real(), eig.eigenvectors(2, k).real()};
    }
    const auto &d = eig.eigenvalues;
    Vec3 b{dot(q[0], mtc), dot(q[1], mtc), dot(q[2], mtc)};

    size_t top_count = 1;
    while (top_count < 3 && d[0] - d[top_count] < kDegenerateTol) {
        top_count++;
    }
    double top_norm2 = 0;
    for (size_t i = 0; i < top_count; i++) {
        top_norm2 += b[i] * b[i];
    }
    double b_norm = norm(b);

    SphereMaxResult result{};
    Vec3 y{};
    if (std::sqrt(top_norm2) >= kHardCaseTol) {
        SecularTerms terms{{d.begin(), d.end()}, {b[0] * b[0], b[1] * b[1], b[2] * b[2]}};
        double lambda = solve_secular(terms, d[0] + 1e-14, d[0] + b_norm + 1);
        for (size_t i = 0; i < 3; i++) {
            y[i] = b[i] / (lambda - d[i]);
        }
        result.multiplier = lambda;
        result.hard_case = false;
    } else {
        result.hard_case = true;
        SecularTerms rest;
        for (size_t i = top_count; i < 3; i++) {
            rest.d.push_back(d[i]);
            rest.b2.push_back(b[i] * b[i]);
        }
        double at_pole = secular(rest, d[0]);
        if (at_pole >= 1) {
            double lambda = solve_secular(rest, d[0], d[0] + b_norm + 1);
            for (size_t i = top_count; i < 3; i++) {
                y[i] = b[i] / (lambda - d[i]);
            }
            result.multiplier = lambda;
        } else {
            double partial = 0;
            for (size_t i = top_count; i < 3; i++) {
                y[i] = b[i] / (d[0] - d[i]);
                partial += y[i] * y[i];
            }
            double deficit = std::sqrt(std::max(0.0, 1 - partial));

            // Fill direction: the largest projection of e_z, e_y, e_x onto the
            // top eigenspace, earlier axes winning ties.
            Vec3 fill{};
            double fill_norm = -1;
            for (size_t axis : {size_t{2}, size_t{1}, size_t{0}}) {
                Vec3 proj{};
                for (size_t i = 0; i < top_count; i++) {
                    proj = proj + q[i][axis] * q[i];
                }
                double n = norm(proj);
                if (n > fill_norm + kSignTol) {
                    fill_norm = n;
                    fill = (1 / n) * proj;
                }
            }
            fill = canonical_sign(fill);
            for (size_t i = 0; i < top_count; i++) {
                y[i] = deficit * dot(q[i], fill);
            }
            result.multiplier = d[0];
        }
    }

    Vec3 r = y[0] * q[0] + y[1] * q[1] + y[2] * q[2];
    double rn = norm(r);
    result.argmax = rn > 0 ? (1 / rn) * r : Vec3{0, 0, 1};
    result.value = objective(m, c, result.argmax);
    return result;
}

GridSearchResult grid_search(const RealMatrix3 &m, const Vec3 &c, size_t n) {
    if (n < 100) {
        throw Error(ErrorKind::ParamOutOfRange, "grid search needs at least 100 points");
    }
    auto points = fibonacci_sphere(n);
    std::vector<double> values(points.size());
    for (size_t i = 0; i < points.size(); i++) {
        values[i] = objective(m, c, points[i]);
    }
    size_t best = 0;
    for (size_t i = 1; i < values.size(); i++) {
        if (values[i] > values[best]) {
            best = i;
        }
    }
    double runner_up = 0;
    double far = std::cos(kRunnerUpAngle);
    for (size_t i = 0; i < values.size(); i++) {
        if (dot(points[i], points[best]) < far) {
            runner_up = std::max(runner_up, values[i]);
        }
    }

    Vec3 r = points[best];
    double value = values[best];
    RealMatrix3 mt = m.transpose();
    for (int step = 0; step < kRefineSteps; step++) {
        Vec3 grad = mt.apply(m.apply(r) + c);
        Vec3 tangent = grad - dot(grad, r) * r;
        double tn = norm(tangent);
        if (tn < 1e-15) {
            break;
        }
        Vec3 u = (1 / tn) * tangent;
        double t = best_angle(m.apply(r), m.apply(u), c);
        Vec3 candidate = std::cos(t) * r + std::sin(t) * u;
        candidate = (1 / norm(candidate)) * candidate;
        double v = objective(m, c, candidate);
        if (v <= value) {
            break;
        }
        r = candidate;
        value = v;
    }
    return {value, r, runner_up};
}

double grid_oracle(const RealMatrix3 &m, const Vec3 &c, size_t n) {
    return grid_search(m, c, n).value;
}

}  // namespace chandisc

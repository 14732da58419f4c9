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

#ifndef CHANDISC_SPHEREOPT_H
#define CHANDISC_SPHEREOPT_H

#include <cstddef>

#include "chandisc/linalg.h"

namespace chandisc {

struct SphereMaxResult {
    /// max ||m r + c|| over unit r.
    double value;
    Vec3 argmax;
    /// Lagrange multiplier lambda with m^T (m r + c) = lambda r.
    double multiplier;
    /// True when m^T c has no component along the top eigenspace of m^T m.
    bool hard_case;
};

/// Global maximum of ||m r + c|| on the unit sphere.
///
/// Let m^T m = Q diag(d1 >= d2 >= d3) Q^T and b = Q^T m^T c. Stationary points
/// have r_i = b_i / (lambda - d_i) in the eigenbasis with
/// sum_i b_i^2 / (lambda - d_i)^2 = 1, and the global maximum is the one with
/// lambda >= d1. That secular equation is solved by safeguarded
/// Newton/bisection. When b vanishes on the top eigenspace and the remaining
/// terms cannot reach 1, lambda = d1 and the leftover norm is placed along a
/// top eigenvector; the maximizer set is then a circle (or sphere) and one
/// member is picked deterministically.
SphereMaxResult maximize_on_sphere(const RealMatrix3 &m, const Vec3 &c);

struct GridSearchResult {
    double value;
    Vec3 argmax;
    /// Best grid value among points more than 0.5 rad from the best grid
    /// point; a small gap to `value` signals a non-unique maximizer.
    double runner_up;
};

/// Brute-force check: best of n Fibonacci-sphere points, then 20 steps of
/// gradient ascent along great circles with exact line search. Independent
/// of the secular-equation route.
GridSearchResult grid_search(const RealMatrix3 &m, const Vec3 &c, size_t n);
double grid_oracle(const RealMatrix3 &m, const Vec3 &c, size_t n);

}  // namespace chandisc

#endif

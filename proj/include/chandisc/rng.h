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

#ifndef CHANDISC_RNG_H
#define CHANDISC_RNG_H

#include <complex>
#include <cstdint>

namespace chandisc {

/// Counter-based generator: the k-th draw of stream s under seed x is a pure
/// function of (x, s, k), so results do not depend on platform or on the
/// order in which independent streams are consumed.
///
/// Gaussians use Box-Muller on top of the raw stream instead of
/// std::normal_distribution, whose output is implementation-defined.
class CounterRng {
   public:
    CounterRng(uint64_t seed, uint64_t stream);

    uint64_t next_u64();
    /// Uniform on [0, 1) with 53 bits.
    double uniform();
    double normal();
    /// Standard complex Gaussian, E|z|^2 = 1.
    std::complex<double> complex_normal();

    uint64_t counter() const noexcept {
        return counter_;
    }

   private:
    uint64_t key_;
    uint64_t counter_ = 0;
};

uint64_t splitmix64(uint64_t x);

}  // namespace chandisc

#endif

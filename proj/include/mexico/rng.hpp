// Copyright 2026 The mexico Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MEXICO_RNG_HPP
#define MEXICO_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace mexico {

/// Seeded generator with hand-rolled distributions. std::* distributions are
/// implementation-defined, so everything downstream of a seed is derived here
/// from raw mt19937_64 output to keep results identical across toolchains.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform in the open interval (0, 1).
  double uniform() {
    const std::uint64_t bits = gen_() >> 11;  // top 53 bits
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Unit-rate exponential.
  double exponential() { return -std::log(uniform()); }

  /// Standard Frechet (unit scale, tail index 1): 1 / Exp(1).
  double frechet() { return 1.0 / exponential(); }

  /// Uniform draw from the probability simplex, i.e. Dirichlet(1, ..., 1).
  std::vector<double> dirichlet_uniform(std::size_t p) {
    std::vector<double> v(p);
    double s = 0.0;
    for (auto& x : v) {
      x = exponential();
      s += x;
    }
    for (auto& x : v) x /= s;
    return v;
  }

  std::size_t index(std::size_t n) {
    // rejection-free enough for test-scale n; bias < 2^-53
    return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n;
  }

  std::uint64_t raw() { return gen_(); }

  /// Stable derivation of per-run seeds (splitmix64 of seed xor stream).
  static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

private:
  std::mt19937_64 gen_;
};

}  // namespace mexico

#endif  // MEXICO_RNG_HPP

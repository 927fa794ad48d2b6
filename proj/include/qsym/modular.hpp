// Copyright 2026 The qsym Authors
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

#ifndef QSYM_MODULAR_HPP
#define QSYM_MODULAR_HPP

#include <cstdint>
#include <optional>
#include <random>

#include "qsym/gaussian_rational.hpp"

namespace qsym {

bool is_prime_u32(std::uint64_t n);

/// Arithmetic in F_p for a prime p = 1 (mod 4) in (2^30, 2^31). Such a
/// field contains a square root of -1, which gives a ring map
/// Z[i][1/denominators] -> F_p used to reduce Gaussian rationals.
class PrimeField {
   public:
    using value_type = std::uint64_t;

    explicit PrimeField(std::uint64_t p);
    static PrimeField random(std::mt19937_64 &rng);

    std::uint64_t prime() const noexcept { return p_; }
    std::uint64_t sqrt_minus_one() const noexcept { return root_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept { return (a * b) % p_; }
    std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const noexcept;
    std::uint64_t inv(std::uint64_t a) const noexcept { return pow(a, p_ - 2); }

    std::optional<std::uint64_t> reduce(const Rational &q) const;
    /// Image of re + im*i, or nullopt when p divides a denominator.
    std::optional<std::uint64_t> reduce(const GaussianRational &z) const;

   private:
    std::uint64_t p_;
    std::uint64_t root_;
};

}  // namespace qsym

#endif  // QSYM_MODULAR_HPP

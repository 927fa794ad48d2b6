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

#include "qsym/modular.hpp"

#include "qsym/errors.hpp"

namespace qsym {

namespace {

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) r = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r) * a % m);
        a = static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * a % m);
        e >>= 1;
    }
    return r;
}

}  // namespace

// Deterministic Miller-Rabin; bases {2, 7, 61} are exact below 2^32.
bool is_prime_u32(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t small : {2u, 3u, 5u, 7u, 11u, 13u, 61u}) {
        if (n % small == 0) return n == small;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2u, 7u, 61u}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * x % n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p), root_(0) {
    if (p <= (1ull << 30) || p >= (1ull << 31) || p % 4 != 1 || !is_prime_u32(p)) {
        throw_error(ErrorCode::InvalidArgument, "modulus must be a prime = 1 mod 4 in (2^30, 2^31)");
    }
    // c^((p-1)/4) squares to -1 exactly when c is a quadratic non-residue.
    for (std::uint64_t c = 2;; ++c) {
        if (powmod(c, (p - 1) / 2, p) == p - 1) {
            root_ = powmod(c, (p - 1) / 4, p);
            break;
        }
    }
}

PrimeField PrimeField::random(std::mt19937_64 &rng) {
    std::uniform_int_distribution<std::uint64_t> dist((1ull << 28) + 1, (1ull << 29) - 1);
    for (;;) {
        std::uint64_t p = 4 * dist(rng) + 1;
        if (is_prime_u32(p)) return PrimeField(p);
    }
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const noexcept { return powmod(a, e, p_); }

std::optional<std::uint64_t> PrimeField::reduce(const Rational &q) const {
    unsigned long den = mpz_fdiv_ui(q.get_den_mpz_t(), p_);
    if (den == 0) return std::nullopt;
    unsigned long num = mpz_fdiv_ui(q.get_num_mpz_t(), p_);
    return mul(num, inv(den));
}

std::optional<std::uint64_t> PrimeField::reduce(const GaussianRational &z) const {
    auto re = reduce(z.re());
    auto im = reduce(z.im());
    if (!re || !im) return std::nullopt;
    return add(*re, mul(*im, root_));
}

}  // namespace qsym

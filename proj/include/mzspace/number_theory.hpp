#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace mzspace {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Distinct prime factors in increasing order (trial division).
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

/// Returns (p, k) with q = p^k, or nullopt when q is not a prime power.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t q);

/// Largest power of p dividing n, together with the cofactor: n = p^a * d, p does not divide d.
std::pair<std::uint64_t, std::uint64_t> split_prime_part(std::uint64_t n, std::uint64_t p);

}  // namespace mzspace

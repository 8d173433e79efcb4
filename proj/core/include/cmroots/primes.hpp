#pragma once

#include <cstdint>
#include <vector>

namespace cmroots {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t e, std::uint64_t m);

/* Deterministic Miller-Rabin; exact for every 64-bit input. */
bool is_prime_u64(std::uint64_t n);

/* Distinct prime factors of n in increasing order, by trial division.
 * Intended for desk-scale n (discriminants up to ~10^12). */
std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n);

}  // namespace cmroots

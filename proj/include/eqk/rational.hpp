#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "eqk/error.hpp"

namespace eqk {

// Exact scalars. Int is an arbitrary-precision integer, Rat a rational kept
// in lowest terms with positive denominator (mpq_class canonicalizes).
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p/q" or "p". Rejects zero denominators.
Rat parse_rat(const std::string& s);
std::string rat_to_string(const Rat& q);

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// True iff q has no p in its reduced denominator.
inline bool denominator_coprime_to(const Rat& q, const Int& p) {
    return !mpz_divisible_p(q.get_den_mpz_t(), p.get_mpz_t());
}

// Small utility number theory on machine words; enough for conductors and
// group orders, which the kernel caps well below 2^32.
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t euler_phi(std::uint64_t n);
bool is_prime_u64(std::uint64_t n);
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);

} // namespace eqk

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "eqk/rational.hpp"

namespace eqk {

// An element of Q(zeta_n) in the power basis {zeta_n^i : 0 <= i < phi(n)},
// reduced modulo the n-th cyclotomic polynomial. The representation is
// canonical for a fixed conductor: equal values have equal coefficient
// vectors. Values at different conductors are compared after lifting both
// into Q(zeta_lcm).
class Cyclo {
public:
    Cyclo();                                   // 0 at conductor 1
    explicit Cyclo(const Rat& rational);       // rational at conductor 1
    explicit Cyclo(long rational);
    Cyclo(std::uint64_t conductor, std::vector<Rat> coeffs);

    // zeta_n^k
    static Cyclo root_of_unity(std::uint64_t n, std::uint64_t k = 1);
    static Cyclo zero() { return Cyclo(); }
    static Cyclo one() { return Cyclo(1); }

    std::uint64_t conductor() const { return n_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    // The rational value; throws NotRational if the element is irrational.
    Rat rational_value() const;

    // Returns the equal value re-expressed in Q(zeta_m); requires n | m.
    Cyclo lifted_to(std::uint64_t m) const;
    // Smallest conductor d | n with the value in Q(zeta_d).
    Cyclo minimized() const;

    Cyclo operator-() const;
    Cyclo operator+(const Cyclo& o) const;
    Cyclo operator-(const Cyclo& o) const;
    Cyclo operator*(const Cyclo& o) const;
    Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
    Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
    Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }

    // Field inverse; DivisionByZero on 0.
    Cyclo inverse() const;
    Cyclo operator/(const Cyclo& o) const { return *this * o.inverse(); }

    bool operator==(const Cyclo& o) const;
    bool operator!=(const Cyclo& o) const { return !(*this == o); }

    // Galois action zeta_n -> zeta_n^a for gcd(a, n) = 1; InvalidUnit else.
    Cyclo galois(std::uint64_t a) const;
    // Fixed by complex conjugation (under every embedding zeta -> zeta^a).
    bool is_real() const;

    // True iff every coefficient denominator is coprime to p, which is
    // integrality at every prime above p (the power basis spans the maximal
    // order at any conductor).
    bool is_p_integral(std::uint64_t p) const;

    // Deterministic total order (conductor-insensitive), used only to fix
    // reproducible orderings of irreducible characters and report rows.
    static int compare(const Cyclo& a, const Cyclo& b);

    std::string to_string() const;

private:
    std::uint64_t n_;
    std::vector<Rat> c_;   // length phi(n_)

    void reduce_mod_cyclotomic(std::vector<Rat>& poly) const;
};

std::ostream& operator<<(std::ostream& os, const Cyclo& x);

// Coefficients of the n-th cyclotomic polynomial (degree phi(n)), cached.
const std::vector<Int>& cyclotomic_polynomial(std::uint64_t n);

// Lifts both operands to the lcm of their conductors.
void to_common_conductor(Cyclo& a, Cyclo& b);

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

// Exact sign of a totally real cyclotomic value under the embedding
// zeta_n -> exp(2*pi*i*a/n). The zero case is decided by the canonical
// representation; a nonzero sign is certified by interval evaluation at
// precision_bits (doubled until the enclosure excludes zero).
struct SignCertificate {
    Cyclo value;
    std::uint64_t embedding;
    Sign sign;
    unsigned precision_bits;
};

// NotReal if conjugation does not fix the value; InvalidUnit if
// gcd(embedding, conductor) != 1.
SignCertificate certified_sign(const Cyclo& x, std::uint64_t embedding = 1);

} // namespace eqk

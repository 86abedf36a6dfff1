#pragma once

#include <cstdint>

#include <gmpxx.h>
#include <mpfr.h>

namespace eqk {

// Minimal interval arithmetic over MPFR with outward rounding; just what the
// certified sign test needs: rational endpoints, +, *, and cos of 2*pi*k/n.
class Interval {
public:
    explicit Interval(unsigned prec);
    Interval(const Interval& o);
    Interval& operator=(const Interval& o);
    ~Interval();

    static Interval from_rat(const mpq_class& q, unsigned prec);
    // Encloses cos(2*pi*k/n).
    static Interval cos_two_pi(std::uint64_t k, std::uint64_t n, unsigned prec);

    Interval operator+(const Interval& o) const;
    Interval operator*(const Interval& o) const;

    bool strictly_positive() const;
    bool strictly_negative() const;

private:
    unsigned prec_;
    mpfr_t lo_, hi_;
};

} // namespace eqk

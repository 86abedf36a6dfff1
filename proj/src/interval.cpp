#include "eqk/interval.hpp"

#include <algorithm>

namespace eqk {

Interval::Interval(unsigned prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval& Interval::operator=(const Interval& o) {
    if (this != &o) {
        mpfr_set_prec(lo_, o.prec_);
        mpfr_set_prec(hi_, o.prec_);
        prec_ = o.prec_;
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::from_rat(const mpq_class& q, unsigned prec) {
    Interval r(prec);
    mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval Interval::cos_two_pi(std::uint64_t k, std::uint64_t n, unsigned prec) {
    // theta = 2*pi*k/n with k in [0, n). Work at a few guard bits and take
    // cos at both endpoints; if the enclosure of theta straddles a multiple
    // of pi the extremum is clamped in.
    unsigned wp = prec + 16;
    mpfr_t pi_lo, pi_hi, th_lo, th_hi, tmp;
    mpfr_inits2(wp, pi_lo, pi_hi, th_lo, th_hi, tmp, (mpfr_ptr) nullptr);
    mpfr_const_pi(pi_lo, MPFR_RNDD);
    mpfr_const_pi(pi_hi, MPFR_RNDU);

    // th = 2*k/n * pi, outward
    mpq_class ratio(2 * mpz_class(static_cast<unsigned long>(k)),
                    mpz_class(static_cast<unsigned long>(n)));
    ratio.canonicalize();
    mpfr_set_q(tmp, ratio.get_mpq_t(), MPFR_RNDD);
    mpfr_mul(th_lo, tmp, pi_lo, MPFR_RNDD);
    mpfr_set_q(tmp, ratio.get_mpq_t(), MPFR_RNDU);
    mpfr_mul(th_hi, tmp, pi_hi, MPFR_RNDU);

    Interval r(prec);
    mpfr_t c1, c2;
    mpfr_inits2(wp, c1, c2, (mpfr_ptr) nullptr);
    mpfr_cos(c1, th_lo, MPFR_RNDD);
    mpfr_cos(c2, th_hi, MPFR_RNDD);
    mpfr_min(r.lo_, c1, c2, MPFR_RNDD);
    mpfr_cos(c1, th_lo, MPFR_RNDU);
    mpfr_cos(c2, th_hi, MPFR_RNDU);
    mpfr_max(r.hi_, c1, c2, MPFR_RNDU);

    // Extrema of cos on [th_lo, th_hi]: multiples of pi inside the interval.
    // m ranges over integers with m*pi in [th_lo, th_hi]; since 0 <= theta
    // < 2*pi and the enclosure is tight, only m in {0, 1, 2} can occur.
    for (long m = 0; m <= 2; ++m) {
        mpfr_mul_si(tmp, pi_lo, m, MPFR_RNDD);
        bool above_lo = mpfr_cmp(tmp, th_lo) >= 0;
        mpfr_mul_si(tmp, pi_hi, m, MPFR_RNDU);
        bool below_hi = mpfr_cmp(tmp, th_hi) <= 0;
        if (above_lo && below_hi) {
            if (m % 2 == 0)
                mpfr_set_si(r.hi_, 1, MPFR_RNDU);
            else
                mpfr_set_si(r.lo_, -1, MPFR_RNDD);
        }
    }
    mpfr_clears(pi_lo, pi_hi, th_lo, th_hi, tmp, c1, c2, (mpfr_ptr) nullptr);
    return r;
}

Interval Interval::operator+(const Interval& o) const {
    Interval r(std::max(prec_, o.prec_));
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::operator*(const Interval& o) const {
    Interval r(std::max(prec_, o.prec_));
    mpfr_t p, best_lo, best_hi;
    mpfr_inits2(r.prec_, p, best_lo, best_hi, (mpfr_ptr) nullptr);
    bool first = true;
    const mpfr_srcptr as[2] = {lo_, hi_};
    const mpfr_srcptr bs[2] = {o.lo_, o.hi_};
    for (auto a : as)
        for (auto b : bs) {
            mpfr_mul(p, a, b, MPFR_RNDD);
            if (first || mpfr_cmp(p, best_lo) < 0) mpfr_set(best_lo, p, MPFR_RNDD);
            mpfr_mul(p, a, b, MPFR_RNDU);
            if (first || mpfr_cmp(p, best_hi) > 0) mpfr_set(best_hi, p, MPFR_RNDU);
            first = false;
        }
    mpfr_set(r.lo_, best_lo, MPFR_RNDD);
    mpfr_set(r.hi_, best_hi, MPFR_RNDU);
    mpfr_clears(p, best_lo, best_hi, (mpfr_ptr) nullptr);
    return r;
}

bool Interval::strictly_positive() const { return mpfr_sgn(lo_) > 0; }
bool Interval::strictly_negative() const { return mpfr_sgn(hi_) < 0; }

} // namespace eqk

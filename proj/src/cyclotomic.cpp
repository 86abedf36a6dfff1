#include "eqk/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "eqk/interval.hpp"

namespace eqk {

// ---------------------------------------------------------------------------
// scalar utilities

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Int n(s);
            return Rat(n);
        }
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        require(den != 0, "BadInput", "zero denominator in '" + s + "'");
        Rat q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        fail("BadInput", "malformed rational '" + s + "'");
    }
}

std::string rat_to_string(const Rat& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd_u64(a, b) * b;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> f;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
        if (n % p) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.emplace_back(p, e);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t r = n;
    for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
    return r;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t r = 1 % mod;
    base %= mod;
    while (exp) {
        if (exp & 1) r = (__uint128_t)r * base % mod;
        base = (__uint128_t)base * base % mod;
        exp >>= 1;
    }
    return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
    std::int64_t t = 0, nt = 1;
    std::int64_t r = (std::int64_t)m, nr = (std::int64_t)(a % m);
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    require(r == 1, "InvalidUnit", "not invertible modulo " + std::to_string(m));
    return (std::uint64_t)(t < 0 ? t + (std::int64_t)m : t);
}

// ---------------------------------------------------------------------------
// polynomial helpers over Rat (dense, trailing zeros trimmed)

namespace {

void trim(std::vector<Rat>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of p modulo the monic integer polynomial m.
void rem_in_place(std::vector<Rat>& p, const std::vector<Int>& m) {
    const std::size_t deg_m = m.size() - 1;
    while (p.size() > deg_m) {
        Rat lead = p.back();
        std::size_t shift = p.size() - 1 - deg_m;
        if (lead != 0)
            for (std::size_t i = 0; i < deg_m; ++i) p[shift + i] -= lead * Rat(m[i]);
        p.pop_back();
        trim(p);
        if (p.size() <= deg_m) break;
    }
}

std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rat> c(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

// Exact division of integer polynomials, used to build cyclotomics.
std::vector<Int> poly_div_exact(std::vector<Int> num, const std::vector<Int>& den) {
    std::vector<Int> q(num.size() - den.size() + 1, Int(0));
    for (std::size_t k = q.size(); k-- > 0;) {
        Int c = num[k + den.size() - 1] / den.back();
        q[k] = c;
        if (c != 0)
            for (std::size_t i = 0; i < den.size(); ++i) num[k + i] -= c * den[i];
    }
    return q;
}

} // namespace

const std::vector<Int>& cyclotomic_polynomial(std::uint64_t n) {
    static std::map<std::uint64_t, std::vector<Int>> cache;
    static std::mutex mx;
    std::lock_guard<std::mutex> lock(mx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    std::vector<Int> num(n + 1, Int(0));
    num[0] = -1;
    num[n] = 1;
    for (std::uint64_t d = 1; d < n; ++d) {
        if (n % d) continue;
        // compute recursively through the cache (no lock recursion: inline)
        if (!cache.count(d)) {
            std::vector<Int> nd(d + 1, Int(0));
            nd[0] = -1;
            nd[d] = 1;
            for (std::uint64_t e = 1; e < d; ++e)
                if (d % e == 0) nd = poly_div_exact(std::move(nd), cache.at(e));
            cache[d] = std::move(nd);
        }
        num = poly_div_exact(std::move(num), cache.at(d));
    }
    return cache[n] = std::move(num);
}

// ---------------------------------------------------------------------------
// Cyclo

Cyclo::Cyclo() : n_(1), c_(1, Rat(0)) {}

Cyclo::Cyclo(const Rat& q) : n_(1), c_(1, q) { c_[0].canonicalize(); }

Cyclo::Cyclo(long q) : n_(1), c_(1, Rat(q)) {}

Cyclo::Cyclo(std::uint64_t conductor, std::vector<Rat> coeffs) : n_(conductor) {
    require(conductor >= 1, "BadConductor", "conductor must be positive");
    std::size_t phi = euler_phi(conductor);
    require(coeffs.size() <= phi || conductor == 1,
            "BadInput", "coefficient vector longer than phi(n)");
    coeffs.resize(phi, Rat(0));
    // mpq_class construction does not canonicalize; equality needs it
    for (auto& q : coeffs) q.canonicalize();
    c_ = std::move(coeffs);
}

Cyclo Cyclo::root_of_unity(std::uint64_t n, std::uint64_t k) {
    require(n >= 1, "BadConductor", "conductor must be positive");
    k %= n;
    std::vector<Rat> poly(k + 1, Rat(0));
    poly[k] = 1;
    Cyclo x(n, {});
    x.reduce_mod_cyclotomic(poly);
    poly.resize(euler_phi(n), Rat(0));
    x.c_ = std::move(poly);
    return x;
}

void Cyclo::reduce_mod_cyclotomic(std::vector<Rat>& poly) const {
    rem_in_place(poly, cyclotomic_polynomial(n_));
}

bool Cyclo::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& q) { return q == 0; });
}

bool Cyclo::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat Cyclo::rational_value() const {
    require(is_rational(), "NotRational", "value is irrational");
    return c_[0];
}

Cyclo Cyclo::lifted_to(std::uint64_t m) const {
    require(m % n_ == 0, "BadConductor", "lift target must be a multiple of the conductor");
    if (m == n_) return *this;
    std::uint64_t stride = m / n_;
    std::vector<Rat> poly(euler_phi(n_) * stride, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) poly[i * stride] = c_[i];
    Cyclo r(m, {});
    r.reduce_mod_cyclotomic(poly);
    poly.resize(euler_phi(m), Rat(0));
    r.c_ = std::move(poly);
    return r;
}

void to_common_conductor(Cyclo& a, Cyclo& b) {
    std::uint64_t m = lcm_u64(a.conductor(), b.conductor());
    a = a.lifted_to(m);
    b = b.lifted_to(m);
}

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
    Cyclo a = *this, b = o;
    to_common_conductor(a, b);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
}

Cyclo Cyclo::operator-(const Cyclo& o) const { return *this + (-o); }

Cyclo Cyclo::operator*(const Cyclo& o) const {
    Cyclo a = *this, b = o;
    to_common_conductor(a, b);
    std::vector<Rat> prod = poly_mul(a.c_, b.c_);
    a.reduce_mod_cyclotomic(prod);
    prod.resize(a.c_.size(), Rat(0));
    a.c_ = std::move(prod);
    return a;
}

Cyclo Cyclo::inverse() const {
    require(!is_zero(), "DivisionByZero", "inverse of zero");
    // Extended Euclid in Q[x] against Phi_n (irreducible over Q).
    const auto& phi_int = cyclotomic_polynomial(n_);
    std::vector<Rat> r0(phi_int.begin(), phi_int.end());
    std::vector<Rat> r1 = c_;
    trim(r1);
    std::vector<Rat> s0{}, s1{Rat(1)};   // coefficients of *this
    while (!r1.empty()) {
        // divide r0 by r1
        std::vector<Rat> q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Rat(0));
        std::vector<Rat> rem = r0;
        for (std::size_t k = q.size(); k-- > 0;) {
            if (rem.size() < r1.size() + k) continue;
            Rat coef = rem[r1.size() - 1 + k] / r1.back();
            q[k] = coef;
            if (coef != 0)
                for (std::size_t i = 0; i < r1.size(); ++i) rem[k + i] -= coef * r1[i];
            trim(rem);
        }
        std::vector<Rat> s_new = s0;
        std::vector<Rat> qs = poly_mul(q, s1);
        s_new.resize(std::max(s_new.size(), qs.size()), Rat(0));
        for (std::size_t i = 0; i < qs.size(); ++i) s_new[i] -= qs[i];
        trim(s_new);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s_new);
    }
    // r0 = gcd (a nonzero constant); inverse = s0 / r0
    Rat unit = r0[0];
    Cyclo inv(n_, {});
    std::vector<Rat> res = s0;
    for (auto& q : res) q /= unit;
    inv.reduce_mod_cyclotomic(res);
    res.resize(c_.size(), Rat(0));
    inv.c_ = std::move(res);
    return inv;
}

bool Cyclo::operator==(const Cyclo& o) const {
    if (n_ == o.n_) return c_ == o.c_;
    Cyclo a = *this, b = o;
    to_common_conductor(a, b);
    return a.c_ == b.c_;
}

Cyclo Cyclo::galois(std::uint64_t a) const {
    a %= n_;
    require(gcd_u64(a, n_) == 1, "InvalidUnit",
            "galois exponent not a unit modulo the conductor");
    std::vector<Rat> poly(n_, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) poly[(a * i) % n_] += c_[i];
    Cyclo r(n_, {});
    r.reduce_mod_cyclotomic(poly);
    poly.resize(c_.size(), Rat(0));
    r.c_ = std::move(poly);
    return r;
}

bool Cyclo::is_real() const {
    if (n_ <= 2) return true;
    return galois(n_ - 1) == *this;
}

Cyclo Cyclo::minimized() const {
    if (n_ == 1) return *this;
    for (std::uint64_t d = 1; d < n_; ++d) {
        if (n_ % d) continue;
        // x lies in Q(zeta_d) iff it is fixed by every a = 1 (mod d).
        bool fixed = true;
        for (std::uint64_t a = 1; a < n_ && fixed; a += d)
            if (gcd_u64(a, n_) == 1 && a != 1 && galois(a) != *this) fixed = false;
        if (!fixed) continue;
        // Solve for coordinates in the lifted basis of Q(zeta_d).
        std::size_t phi_d = euler_phi(d), phi_n = c_.size();
        std::vector<std::vector<Rat>> cols;
        for (std::size_t j = 0; j < phi_d; ++j)
            cols.push_back(Cyclo::root_of_unity(d, j).lifted_to(n_).coeffs());
        // Gaussian solve cols * y = c_ (phi_n equations, phi_d unknowns).
        std::vector<std::vector<Rat>> m(phi_n, std::vector<Rat>(phi_d + 1, Rat(0)));
        for (std::size_t i = 0; i < phi_n; ++i) {
            for (std::size_t j = 0; j < phi_d; ++j) m[i][j] = cols[j][i];
            m[i][phi_d] = c_[i];
        }
        std::vector<Rat> y(phi_d, Rat(0));
        std::size_t row = 0;
        std::vector<std::size_t> pivot_of_col(phi_d, SIZE_MAX);
        for (std::size_t col = 0; col < phi_d && row < phi_n; ++col) {
            std::size_t pr = row;
            while (pr < phi_n && m[pr][col] == 0) ++pr;
            if (pr == phi_n) continue;
            std::swap(m[pr], m[row]);
            Rat inv = Rat(1) / m[row][col];
            for (auto& v : m[row]) v *= inv;
            for (std::size_t i = 0; i < phi_n; ++i)
                if (i != row && m[i][col] != 0) {
                    Rat f = m[i][col];
                    for (std::size_t j = col; j <= phi_d; ++j) m[i][j] -= f * m[row][j];
                }
            pivot_of_col[col] = row++;
        }
        for (std::size_t j = 0; j < phi_d; ++j)
            if (pivot_of_col[j] != SIZE_MAX) y[j] = m[pivot_of_col[j]][phi_d];
        return Cyclo(d, std::move(y));
    }
    return *this;
}

bool Cyclo::is_p_integral(std::uint64_t p) const {
    // Z[zeta_n] is the maximal order for every n, so integrality at all
    // primes above p is exactly coprimality of the power-basis denominators.
    Int pz(static_cast<unsigned long>(p));
    for (const auto& q : c_)
        if (!denominator_coprime_to(q, pz)) return false;
    return true;
}

int Cyclo::compare(const Cyclo& a, const Cyclo& b) {
    Cyclo x = a.minimized(), y = b.minimized();
    if (x.conductor() != y.conductor()) return x.conductor() < y.conductor() ? -1 : 1;
    for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
        int c = cmp(x.coeffs()[i], y.coeffs()[i]);
        if (c) return c;
    }
    return 0;
}

std::string Cyclo::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclo& x) {
    bool any = false;
    for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
        const Rat& q = x.coeffs()[i];
        if (q == 0) continue;
        if (any) os << " + ";
        os << "(" << q << ")";
        if (i > 0) os << "*z" << x.conductor() << "^" << i;
        any = true;
    }
    if (!any) os << "0";
    return os;
}

SignCertificate certified_sign(const Cyclo& x, std::uint64_t embedding) {
    std::uint64_t n = x.conductor();
    require(gcd_u64(embedding % n == 0 ? n : embedding % n, n) == 1 || n == 1,
            "InvalidUnit", "embedding must be a unit modulo the conductor");
    require(x.is_real(), "NotReal", "value is not fixed by conjugation");
    if (x.is_zero()) return {x, embedding, Sign::Zero, 0};

    // x = sum_i c_i * cos(2*pi*(a*i mod n)/n) under the embedding; the value
    // is nonzero exactly, so doubling precision terminates.
    for (unsigned prec = 64;; prec *= 2) {
        Interval acc(prec);
        for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
            if (x.coeffs()[i] == 0) continue;
            std::uint64_t k = (embedding % n) * i % n;
            acc = acc + Interval::from_rat(x.coeffs()[i], prec) *
                            Interval::cos_two_pi(k, n, prec);
        }
        if (acc.strictly_positive()) return {x, embedding, Sign::Positive, prec};
        if (acc.strictly_negative()) return {x, embedding, Sign::Negative, prec};
        require(prec < (1u << 20), "PrecisionExhausted",
                "sign undecided at one million bits; input inconsistent");
    }
}

} // namespace eqk

#include "eqk/derivative.hpp"

namespace eqk {

ProductTower ProductTower::make(const FiniteGroup& delta, std::uint64_t p, unsigned depth) {
    require(is_prime_u64(p), "NotDirectProduct", "cyclic factor needs a prime order base");
    require(depth >= 1, "NotDirectProduct", "tower needs at least one level");
    ProductTower t;
    t.delta = delta;
    t.p = p;
    t.depth = depth;
    return t;
}

std::uint64_t ProductTower::level_order(unsigned n) const {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < n; ++i) q *= p;
    return q;
}

ProductValue project_value(const ProductTower& tower, unsigned upper_level,
                           const ProductValue& value) {
    std::uint64_t q_up = tower.level_order(upper_level);
    std::uint64_t q_lo = q_up / tower.p;
    require(value.size() == q_up, "BadInput", "value has the wrong length");
    ProductValue out(q_lo, GAElement(tower.delta));
    for (std::uint64_t i = 0; i < q_up; ++i) out[i % q_lo] = out[i % q_lo] + value[i];
    return out;
}

ProductValue cyclic_mul(const FiniteGroup& delta, const ProductValue& a,
                        const ProductValue& b) {
    require(a.size() == b.size(), "BadInput", "length mismatch");
    std::size_t q = a.size();
    ProductValue out(q, GAElement(delta));
    for (std::size_t i = 0; i < q; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < q; ++j) {
            if (b[j].is_zero()) continue;
            out[(i + j) % q] = out[(i + j) % q] + a[i] * b[j];
        }
    }
    return out;
}

bool value_is_zero(const ProductValue& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

namespace {

// rewrite x(sigma) as a polynomial in tau = sigma^a (a coprime to q):
// sigma = tau^{a^{-1}}
ProductValue substitute_generator(const FiniteGroup& delta, const ProductValue& x,
                                  std::uint64_t a, std::uint64_t q) {
    std::uint64_t ainv = inv_mod(a % q, q);
    ProductValue out(q, GAElement(delta));
    for (std::uint64_t i = 0; i < q; ++i) {
        if (x[i].is_zero()) continue;
        std::uint64_t j = (__uint128_t)ainv * i % q;
        out[j] = out[j] + x[i];
    }
    return out;
}

// (tau - 1)-adic expansion coefficients a_0 .. a_{q-1} by repeated synthetic
// division of the tau-power representation
std::vector<GAElement> adic_expansion(const FiniteGroup& delta, ProductValue poly) {
    std::size_t q = poly.size();
    std::vector<GAElement> coeffs;
    coeffs.reserve(q);
    for (std::size_t step = 0; step < q; ++step) {
        // divide poly (degree < q) by (tau - 1): quotient b, remainder poly(1)
        GAElement rem(delta);
        ProductValue quot(q, GAElement(delta));
        GAElement carry(delta);
        for (std::size_t i = q; i-- > 1;) {
            carry = carry + poly[i];
            quot[i - 1] = carry;
        }
        rem = carry + poly[0];
        coeffs.push_back(rem);
        poly = std::move(quot);
    }
    return coeffs;
}

} // namespace

DerivativeReport finite_derivative(const ProductTower& tower,
                                   const std::vector<ProductValue>& values,
                                   std::uint64_t gamma_exponent, unsigned order) {
    require(values.size() == tower.depth, "BadInput", "one value per tower level");
    DerivativeReport report;
    for (unsigned n = 1; n <= tower.depth; ++n) {
        std::uint64_t q = tower.level_order(n);
        require(values[n - 1].size() == q, "BadInput", "value has the wrong length");
        require(gcd_u64(gamma_exponent % q == 0 ? q : gamma_exponent % q, q) == 1,
                "InvalidUnit", "gamma exponent must stay a generator");
        ProductValue in_tau =
            substitute_generator(tower.delta, values[n - 1], gamma_exponent, q);
        std::vector<GAElement> coeffs = adic_expansion(tower.delta, in_tau);

        DerivativeLevel lvl;
        lvl.achieved_order = order;
        for (unsigned i = 0; i < order && i < q; ++i)
            if (!coeffs[i].is_zero()) {
                lvl.achieved_order = i;
                break;
            }
        lvl.divisible = lvl.achieved_order == order;
        if (lvl.divisible) {
            lvl.derivative = order < q ? coeffs[order] : GAElement(tower.delta);
            // quotient sum_{i >= order} a_i (tau - 1)^{i - order}, back in
            // sigma powers
            ProductValue quot(q, GAElement(tower.delta));
            ProductValue power(q, GAElement(tower.delta));
            power[0] = GAElement::scalar(tower.delta, Cyclo::one());
            // tau - 1 in sigma powers: sigma^{gamma_exponent} - 1
            ProductValue tau_minus_1(q, GAElement(tower.delta));
            tau_minus_1[gamma_exponent % q] =
                GAElement::scalar(tower.delta, Cyclo::one());
            tau_minus_1[0] = tau_minus_1[0] - GAElement::scalar(tower.delta, Cyclo::one());
            for (std::uint64_t i = order; i < q; ++i) {
                if (!coeffs[i].is_zero())
                    for (std::uint64_t s = 0; s < q; ++s) {
                        if (power[s].is_zero()) continue;
                        quot[s] = quot[s] + coeffs[i] * power[s];
                    }
                power = cyclic_mul(tower.delta, power, tau_minus_1);
            }
            lvl.quotient = std::move(quot);
        } else {
            report.all_divisible = false;
        }
        report.levels.push_back(std::move(lvl));
    }
    for (std::size_t n = 1; n < report.levels.size(); ++n)
        if (!report.levels[n].divisible || !report.levels[0].divisible ||
            !(report.levels[n].derivative == report.levels[0].derivative))
            report.stable = false;
    return report;
}

ProductValue inflated_power_family(const ProductTower& tower, unsigned level,
                                   const GAElement& base, std::uint64_t gamma_exponent,
                                   unsigned order) {
    std::uint64_t q = tower.level_order(level);
    ProductValue x(q, GAElement(tower.delta));
    x[0] = base;
    ProductValue tau_minus_1(q, GAElement(tower.delta));
    tau_minus_1[gamma_exponent % q] = GAElement::scalar(tower.delta, Cyclo::one());
    tau_minus_1[0] = tau_minus_1[0] - GAElement::scalar(tower.delta, Cyclo::one());
    for (unsigned i = 0; i < order; ++i) x = cyclic_mul(tower.delta, x, tau_minus_1);
    return x;
}

} // namespace eqk

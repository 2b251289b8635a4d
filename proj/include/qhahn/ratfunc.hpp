#pragma once

#include <utility>
#include <vector>

#include "qhahn/poly.hpp"

namespace qhahn {

template <Field F>
struct Factor {
    Poly<F> poly;
    int exp;  // positive: numerator, negative: denominator
};

// Univariate rational function carrying both its construction as a product of
// factors and a gcd-reduced normalized form (den monic). Evaluation and degree
// reporting use the normalized form; the coefficient formulas walk the factor
// list directly.
template <Field F>
class RatFunc {
public:
    RatFunc() : scalar_(F(1)) { normalized_ = {Poly<F>::constant(F(1)), Poly<F>::constant(F(1))}; }

    static RatFunc from_factors(F scalar, std::vector<Factor<F>> factors) {
        RatFunc f;
        f.scalar_ = std::move(scalar);
        f.factors_ = std::move(factors);
        f.renormalize();
        return f;
    }

    static RatFunc from_num_den(Poly<F> num, Poly<F> den) {
        RatFunc f;
        f.scalar_ = F(1);
        f.factors_.push_back({std::move(num), 1});
        f.factors_.push_back({std::move(den), -1});
        f.renormalize();
        return f;
    }

    const F& scalar() const { return scalar_; }
    const std::vector<Factor<F>>& factors() const { return factors_; }
    const Poly<F>& num() const { return normalized_.first; }
    const Poly<F>& den() const { return normalized_.second; }

    bool is_zero() const { return normalized_.first.is_zero(); }

    // (deg num, deg den) of the reduced form; deg of a zero numerator is
    // Poly<F>::kNegInf.
    std::pair<int, int> degrees() const {
        return {normalized_.first.degree(), normalized_.second.degree()};
    }

    F eval(const F& x0) const {
        F dv = normalized_.second.eval(x0);
        if (dv.is_zero()) throw PoleError("denominator vanishes at " + x0.str());
        return normalized_.first.eval(x0) / dv;
    }

private:
    F scalar_;
    std::vector<Factor<F>> factors_;
    std::pair<Poly<F>, Poly<F>> normalized_;

    void renormalize() {
        Poly<F> num = Poly<F>::constant(scalar_);
        Poly<F> den = Poly<F>::constant(F(1));
        for (const auto& f : factors_) {
            for (int i = 0; i < std::abs(f.exp); ++i) {
                if (f.exp > 0)
                    num = num * f.poly;
                else
                    den = den * f.poly;
            }
        }
        if (den.is_zero()) throw DivisionByZero();
        if (!num.is_zero()) {
            Poly<F> g = poly_gcd(num, den);
            if (g.degree() > 0) {
                num = divmod(num, g).first;
                den = divmod(den, g).first;
            }
        }
        // den monic
        F lead = den.leading();
        if (!lead.is_one()) {
            F inv = F(1) / lead;
            den = inv * den;
            num = inv * num;
        }
        normalized_ = {std::move(num), std::move(den)};
    }
};

template <Field F>
RatFunc<F> rf_normalize(const RatFunc<F>& f) {
    return RatFunc<F>::from_num_den(f.num(), f.den());
}

template <Field F>
F rf_eval(const RatFunc<F>& f, const F& x0) {
    return f.eval(x0);
}

template <Field F>
std::pair<int, int> rf_degrees(const RatFunc<F>& f) {
    return f.degrees();
}

}  // namespace qhahn

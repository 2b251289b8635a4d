#pragma once

#include <optional>
#include <string>
#include <utility>

#include "qhahn/poly.hpp"

namespace qhahn {

// Element of the rational-function field F(v) in one formal variable v,
// stored gcd-reduced with monic denominator. Parameters sitting at zero or
// infinity are deformed into this field and specialized back at v = 0, so the
// degenerate worked examples evaluate without limits.
template <Field F>
class RF {
public:
    RF() : num_(), den_(Poly<F>::constant(F(1))) {}
    RF(long n) : num_(Poly<F>::constant(F(n))), den_(Poly<F>::constant(F(1))) {}  // NOLINT
    explicit RF(F c) : num_(Poly<F>::constant(std::move(c))), den_(Poly<F>::constant(F(1))) {}
    RF(Poly<F> num, Poly<F> den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

    static RF variable() { return RF(Poly<F>::x(), Poly<F>::constant(F(1))); }
    static RF constant(F c) { return RF(std::move(c)); }

    const Poly<F>& num() const { return num_; }
    const Poly<F>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.degree() == 0 && num_ == den_; }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    RF operator-() const { return RF(-num_, den_, NoReduce{}); }

    friend RF operator+(const RF& a, const RF& b) {
        return RF(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RF operator-(const RF& a, const RF& b) {
        return RF(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RF operator*(const RF& a, const RF& b) { return RF(a.num_ * b.num_, a.den_ * b.den_); }
    friend RF operator/(const RF& a, const RF& b) {
        if (b.is_zero()) throw DivisionByZero();
        return RF(a.num_ * b.den_, a.den_ * b.num_);
    }
    RF& operator+=(const RF& o) { return *this = *this + o; }
    RF& operator-=(const RF& o) { return *this = *this - o; }
    RF& operator*=(const RF& o) { return *this = *this * o; }
    RF& operator/=(const RF& o) { return *this = *this / o; }

    friend bool operator==(const RF& a, const RF& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RF& a, const RF& b) { return !(a == b); }

    // Exact evaluation at v = v0. Reduced form means a removable singularity
    // has already cancelled; a vanishing denominator here is a genuine pole.
    F specialize(const F& v0) const {
        F dv = den_.eval(v0);
        if (dv.is_zero())
            throw PoleError("pole at specialization point v=" + v0.str());
        return num_.eval(v0) / dv;
    }

    std::string str() const {
        if (den_.degree() == 0 && den_.coeff(0).is_one()) return num_.str("v");
        return "(" + num_.str("v") + ")/(" + den_.str("v") + ")";
    }

private:
    struct NoReduce {};
    RF(Poly<F> num, Poly<F> den, NoReduce) : num_(std::move(num)), den_(std::move(den)) {}

    Poly<F> num_, den_;

    void reduce() {
        if (den_.is_zero()) throw DivisionByZero();
        if (num_.is_zero()) {
            den_ = Poly<F>::constant(F(1));
            return;
        }
        Poly<F> g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divmod(num_, g).first;
            den_ = divmod(den_, g).first;
        }
        F lead = den_.leading();
        if (!lead.is_one()) {
            F inv = F(1) / lead;
            num_ = inv * num_;
            den_ = inv * den_;
        }
    }
};

template <class F>
struct is_func_field<RF<F>> : std::true_type {};

template <Field F>
std::optional<RF<F>> try_sqrt(const RF<F>& x) {
    // roots in F(v) exist only when numerator and denominator are squares
    auto n = x.num().sqrt_exact();
    if (!n) return std::nullopt;
    auto d = x.den().sqrt_exact();
    if (!d) return std::nullopt;
    return RF<F>(*n, *d);
}

template <Field F>
const char* field_name(const RF<F>&) {
    return "F(v)";
}

// specialize(x, v0) per the exactfield contract.
template <Field F>
F specialize(const RF<F>& x, const F& v0) {
    return x.specialize(v0);
}

}  // namespace qhahn

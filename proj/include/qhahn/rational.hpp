#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

#include "qhahn/errors.hpp"

namespace qhahn {

// Arbitrary-precision rational, always canonical: denominator > 0 and
// gcd(|num|, den) = 1. Thin wrapper over GMP's mpq_class so the textual
// format and the exact-sqrt logic stay under our control.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
    Rational(long n, long d) : v_(n, d) {
        if (d == 0) throw DivisionByZero();
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) {
        if (d == 0) throw DivisionByZero();
        v_.canonicalize();
    }

    static Rational from_string(std::string_view s) {
        auto r = parse(s);
        if (!r) throw ParseError("bad rational '" + std::string(s) + "'");
        return *r;
    }

    // Accepts "n" or "n/d" with optional leading sign; exact inverse of str().
    static std::optional<Rational> parse(std::string_view s);

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero();
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inv() const {
        if (is_zero()) throw DivisionByZero();
        return Rational(mpq_class(1) / v_);
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    // Exact square root if the value is a perfect rational square.
    std::optional<Rational> sqrt() const {
        if (sign() < 0) return std::nullopt;
        mpz_class n = v_.get_num(), d = v_.get_den();
        if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
        if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return std::nullopt;
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
        return Rational(rn, rd);
    }

    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    // Correctly rounded decimal string with `digits` fractional digits
    // (half away from zero). Display only; never feeds back into arithmetic.
    std::string decimal(int digits) const;

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

inline std::optional<Rational> Rational::parse(std::string_view s) {
    if (s.empty()) return std::nullopt;
    if (s[0] == '+') s.remove_prefix(1);  // GMP rejects a leading plus
    if (s.empty()) return std::nullopt;
    auto is_int = [](std::string_view t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        if (!is_int(s)) return std::nullopt;
        return Rational(mpz_class(std::string(s)));
    }
    std::string_view ns = s.substr(0, slash), ds = s.substr(slash + 1);
    if (!is_int(ns) || !is_int(ds)) return std::nullopt;
    mpz_class d{std::string(ds)};
    if (d == 0) return std::nullopt;
    return Rational(mpz_class(std::string(ns)), d);
}

inline std::string Rational::decimal(int digits) const {
    if (digits < 0) digits = 0;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class n = v_.get_num(), d = v_.get_den();
    bool neg = n < 0;
    if (neg) n = -n;
    // round(n*scale/d) half away from zero
    mpz_class t = n * scale * 2 + d;
    mpz_class r = t / (d * 2);
    std::string body = r.get_str();
    std::string out;
    if (digits == 0) {
        out = body;
    } else {
        while (body.size() <= static_cast<size_t>(digits)) body.insert(body.begin(), '0');
        out = body.substr(0, body.size() - digits) + "." + body.substr(body.size() - digits);
    }
    return (neg && r != 0) ? "-" + out : out;
}

}  // namespace qhahn

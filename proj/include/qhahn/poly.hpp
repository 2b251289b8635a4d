#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "qhahn/field.hpp"

namespace qhahn {

// Dense univariate polynomial over a field, coefficients lowest degree first,
// trimmed so the leading coefficient is nonzero. The zero polynomial is the
// empty vector and reports the distinguished degree kNegInf.
template <Field F>
class Poly {
public:
    static constexpr int kNegInf = std::numeric_limits<int>::min();

    Poly() = default;
    explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(F c) { return Poly(std::vector<F>{std::move(c)}); }
    static Poly x() { return Poly(std::vector<F>{F(0), F(1)}); }
    // c0 + c1*x
    static Poly linear(F c0, F c1) { return Poly(std::vector<F>{std::move(c0), std::move(c1)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return c_.empty() ? kNegInf : static_cast<int>(c_.size()) - 1; }
    const std::vector<F>& coeffs() const { return c_; }
    F coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : F(0);
    }
    const F& leading() const { return c_.back(); }

    F eval(const F& x0) const {
        F acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x0 + *it;
        return acc;
    }

    Poly operator-() const {
        std::vector<F> r(c_);
        for (auto& v : r) v = -v;
        return Poly(std::move(r));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<F> r(std::max(a.c_.size(), b.c_.size()), F(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    friend Poly operator*(const F& s, const Poly& p) {
        std::vector<F> r(p.c_);
        for (auto& v : r) v = s * v;
        return Poly(std::move(r));
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Euclidean division by a nonzero divisor; returns {quotient, remainder}.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw DivisionByZero();
        Poly rem = a;
        std::vector<F> q;
        int db = b.degree();
        if (rem.degree() >= db) q.assign(static_cast<size_t>(rem.degree() - db) + 1, F(0));
        while (!rem.is_zero() && rem.degree() >= db) {
            int shift = rem.degree() - db;
            F factor = rem.leading() / b.leading();
            q[static_cast<size_t>(shift)] = factor;
            std::vector<F> sub(static_cast<size_t>(shift), F(0));
            sub.reserve(shift + b.c_.size());
            for (const auto& cb : b.c_) sub.push_back(factor * cb);
            rem = rem - Poly(std::move(sub));
        }
        return {Poly(std::move(q)), rem};
    }

    Poly monic() const {
        if (is_zero()) return *this;
        F inv = F(1) / leading();
        return inv * *this;
    }

    // x -> s*x
    Poly scale_arg(const F& s) const {
        std::vector<F> r(c_);
        F p(1);
        for (size_t i = 1; i < r.size(); ++i) {
            p = p * s;
            r[i] = r[i] * p;
        }
        return Poly(std::move(r));
    }

    // x^deg * p(1/x) with deg = degree(); the coefficient-reversed polynomial.
    Poly reversed() const {
        std::vector<F> r(c_.rbegin(), c_.rend());
        return Poly(std::move(r));
    }

    // Exact square root of a polynomial that is a perfect square, else nullopt.
    std::optional<Poly> sqrt_exact() const;

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            std::string term = c_[i].str();
            if (i > 0) {
                if (c_[i].is_one())
                    term = var;
                else if ((-c_[i]).is_one())
                    term = "-" + var;
                else
                    term += "*" + var;
                if (i > 1) term += "^" + std::to_string(i);
            }
            if (out.empty()) {
                out = term;
            } else if (!term.empty() && term[0] == '-') {
                out += " - " + term.substr(1);
            } else {
                out += " + " + term;
            }
        }
        return out;
    }

private:
    std::vector<F> c_;

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

// Monic gcd via the Euclidean algorithm over the coefficient field; inputs of
// the library have degree <= 8, so no fraction-free refinement is needed.
template <Field F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
    if (a.is_zero() && b.is_zero()) throw InvalidParam("gcd(0, 0) undefined");
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

template <Field F>
std::optional<Poly<F>> Poly<F>::sqrt_exact() const {
    if (is_zero()) return Poly();
    if (degree() % 2 != 0) return std::nullopt;
    auto lead = try_sqrt(leading());
    if (!lead) return std::nullopt;
    int h = degree() / 2;
    // match coefficients top-down: r = lead*x^h + ...
    std::vector<F> r(static_cast<size_t>(h) + 1, F(0));
    r[static_cast<size_t>(h)] = *lead;
    for (int k = h - 1; k >= 0; --k) {
        // coefficient of x^(k+h) in r^2 must equal ours
        F acc(0);
        for (int i = k + 1; i <= h; ++i) {
            int j = k + h - i;
            if (j > h || j < 0 || j <= k) continue;
            acc = acc + r[static_cast<size_t>(i)] * r[static_cast<size_t>(j)];
        }
        F target = coeff(k + h) - acc;
        r[static_cast<size_t>(k)] = target / (F(2) * *lead);
    }
    Poly cand{std::vector<F>(r)};
    if (cand * cand == *this) return cand;
    return std::nullopt;
}

}  // namespace qhahn

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "qhahn/rational.hpp"

namespace qhahn {

// Element a + b*rt of the quadratic extension Q(rt), rt^2 = s. The radicand s
// is carried with each element; elements with b = 0 are context-free rationals
// and combine with any s, while two elements with nonzero b must agree on s.
// A single extension at a time is supported (no towers): every computation of
// the library needs at most one irrational.
class Quad {
public:
    Quad() : a_(0), b_(0), s_(0) {}
    Quad(long n) : a_(n), b_(0), s_(0) {}  // NOLINT: implicit integer embedding
    explicit Quad(Rational a) : a_(std::move(a)), b_(0), s_(0) {}
    Quad(Rational a, Rational b, Rational s)
        : a_(std::move(a)), b_(std::move(b)), s_(std::move(s)) {}

    static Quad rational(Rational a) { return Quad(std::move(a)); }
    static Quad root_of(const Rational& s) { return Quad(Rational(0), Rational(1), s); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& radicand() const { return s_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const { return b_.is_zero() && a_.is_one(); }
    bool is_rational() const { return b_.is_zero(); }

    Quad operator-() const { return Quad(-a_, -b_, s_); }

    friend Quad operator+(const Quad& x, const Quad& y) {
        Rational s = unify(x, y);
        return Quad(x.a_ + y.a_, x.b_ + y.b_, s);
    }
    friend Quad operator-(const Quad& x, const Quad& y) {
        Rational s = unify(x, y);
        return Quad(x.a_ - y.a_, x.b_ - y.b_, s);
    }
    friend Quad operator*(const Quad& x, const Quad& y) {
        Rational s = unify(x, y);
        // (a1 + b1 rt)(a2 + b2 rt) = a1 a2 + b1 b2 s + (a1 b2 + b1 a2) rt
        return Quad(x.a_ * y.a_ + x.b_ * y.b_ * s, x.a_ * y.b_ + x.b_ * y.a_, s);
    }
    friend Quad operator/(const Quad& x, const Quad& y) {
        if (y.is_zero()) throw DivisionByZero();
        Rational s = unify(x, y);
        // multiply by the conjugate; the norm a^2 - s b^2 is nonzero for
        // nonzero y whenever s is not a rational square, and also when it is
        // unless y itself is zero in disguise -- guard anyway.
        Rational norm = y.a_ * y.a_ - s * y.b_ * y.b_;
        if (norm.is_zero()) {
            // s is a square and y = b(r - rt)-like zero divisor cannot occur in
            // a field; if norm vanishes with y != 0, s = (a/b)^2 and the
            // representation is degenerate. Resolve through the rational root.
            throw DivisionByZero();
        }
        Quad conj(y.a_, -y.b_, s);
        Quad num = x * conj;
        return Quad(num.a_ / norm, num.b_ / norm, s);
    }

    Quad& operator+=(const Quad& o) { return *this = *this + o; }
    Quad& operator-=(const Quad& o) { return *this = *this - o; }
    Quad& operator*=(const Quad& o) { return *this = *this * o; }
    Quad& operator/=(const Quad& o) { return *this = *this / o; }

    friend bool operator==(const Quad& x, const Quad& y) {
        if (x.b_.is_zero() != y.b_.is_zero()) return false;
        if (!x.b_.is_zero() && x.s_ != y.s_) return false;
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const Quad& x, const Quad& y) { return !(x == y); }

    Quad inv() const { return Quad(1) / *this; }

    // Square root within Q(rt) if one exists, else nullopt.
    // Candidate u + w*rt needs u^2 + s w^2 = a and 2uw = b.
    std::optional<Quad> sqrt_in_field() const;

    std::string str() const {
        if (b_.is_zero()) return a_.str();
        std::string bs;
        Rational ab = b_.abs();
        if (!ab.is_one()) bs = ab.str() + "*";
        std::string tail = bs + "rt";
        if (a_.is_zero()) return (b_.sign() < 0 ? "-" : "") + tail;
        return a_.str() + (b_.sign() < 0 ? "-" : "+") + tail;
    }

    // Inverse of str(); the ambient radicand must be supplied since "a+b*rt"
    // does not carry it.
    static std::optional<Quad> parse(std::string_view s, const Rational& radicand);

    std::string decimal(int digits) const;

private:
    Rational a_, b_, s_;

    // A value with b = 0 is mathematically rational and combines with any
    // context; its s is kept so the ambient radicand survives arithmetic.
    static Rational unify(const Quad& x, const Quad& y) {
        if (!x.b_.is_zero() && !y.b_.is_zero()) {
            if (x.s_ != y.s_)
                throw MixedContext("rt^2=" + x.s_.str() + " vs rt^2=" + y.s_.str());
            return x.s_;
        }
        if (!x.b_.is_zero()) return x.s_;
        if (!y.b_.is_zero()) return y.s_;
        return x.s_.is_zero() ? y.s_ : x.s_;
    }
};

inline std::optional<Quad> Quad::sqrt_in_field() const {
    if (b_.is_zero()) {
        if (auto r = a_.sqrt()) {
            Rational u = *r;
            if (u.sign() < 0) u = -u;
            return Quad(u, Rational(0), s_);
        }
        // a = s * w^2 gives the root w*rt
        if (!s_.is_zero()) {
            Rational ratio = a_ / s_;
            if (auto w = ratio.sqrt()) {
                Rational ww = *w;
                if (ww.sign() < 0) ww = -ww;
                return Quad(Rational(0), ww, s_);
            }
        }
        return std::nullopt;
    }
    // b != 0: need rational n with n^2 = a^2 - s b^2 (the norm), then
    // u^2 = (a +- n)/2 rational square, w = b/(2u).
    Rational normv = a_ * a_ - s_ * b_ * b_;
    auto n = normv.sqrt();
    if (!n) return std::nullopt;
    for (int sgn = 0; sgn < 2; ++sgn) {
        Rational cand = (sgn == 0) ? (a_ + *n) / Rational(2) : (a_ - *n) / Rational(2);
        if (auto u = cand.sqrt()) {
            if (u->is_zero()) continue;
            Rational uu = *u;
            Rational w = b_ / (Rational(2) * uu);
            Quad r(uu, w, s_);
            // canonical: positive rational part, tie-break positive rt part
            if (uu.sign() < 0 || (uu.is_zero() && w.sign() < 0)) r = -r;
            return r;
        }
    }
    return std::nullopt;
}

// Square root of a context-free rational value inside Q(sqrt(s)).
inline std::optional<Quad> sqrt_in_context(const Rational& x, const Rational& s) {
    if (auto r = x.sqrt()) {
        Rational u = *r;
        if (u.sign() < 0) u = -u;
        return Quad(u);
    }
    if (!s.is_zero()) {
        Rational ratio = x / s;
        if (auto w = ratio.sqrt()) {
            Rational ww = *w;
            if (ww.sign() < 0) ww = -ww;
            return Quad(Rational(0), ww, s);
        }
    }
    return std::nullopt;
}

inline std::optional<Quad> Quad::parse(std::string_view s, const Rational& radicand) {
    // grammar: R | [R] ('+'|'-') [R '*'] "rt"
    auto rt = s.rfind("rt");
    if (rt == std::string_view::npos || rt + 2 != s.size()) {
        auto r = Rational::parse(s);
        if (!r) return std::nullopt;
        // rational value carrying the ambient context, so later roots can
        // land in Q(rt)
        return Quad(*r, Rational(0), radicand);
    }
    std::string_view head = s.substr(0, rt);  // e.g. "", "-", "3/2+", "1-2*"
    Rational bmag(1);
    bool bneg = false;
    std::string_view apart;
    if (!head.empty() && head.back() == '*') {
        head.remove_suffix(1);
        // head now ends with the coefficient; find its start: the sign that
        // separates a from b is the last '+'/'-' not at position 0 and not
        // following '/', unless the whole head is the coefficient.
        size_t split = std::string_view::npos;
        for (size_t i = head.size(); i-- > 1;) {
            if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/' && head[i - 1] != '+' &&
                head[i - 1] != '-') {
                split = i;
                break;
            }
        }
        std::string_view bpart;
        if (split == std::string_view::npos) {
            bpart = head;
        } else {
            apart = head.substr(0, split);
            bpart = head.substr(split);
        }
        auto b = Rational::parse(bpart);
        if (!b) return std::nullopt;
        bmag = b->abs();
        bneg = b->sign() < 0;
    } else {
        // forms: "rt", "-rt", "a+rt", "a-rt"
        if (!head.empty() && (head.back() == '+' || head.back() == '-')) {
            bneg = head.back() == '-';
            head.remove_suffix(1);
            apart = head;
        } else if (head == "-") {
            bneg = true;
        } else if (!head.empty()) {
            return std::nullopt;
        }
    }
    Rational a(0);
    if (!apart.empty()) {
        auto av = Rational::parse(apart);
        if (!av) return std::nullopt;
        a = *av;
    }
    return Quad(a, bneg ? -bmag : bmag, radicand);
}

inline std::string Quad::decimal(int digits) const {
    if (b_.is_zero()) return a_.decimal(digits);
    if (s_.sign() >= 0) {
        // a + b*sqrt(s) evaluated with guard digits, then rounded
        int guard = digits + 12;
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(2 * guard));
        mpz_class sn = s_.num() * scale * s_.den();  // s * 10^(2g) * den^2 / den^2
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), sn.get_mpz_t());
        // sqrt(s) ~ root / (10^g * den)
        mpz_class g10;
        mpz_ui_pow_ui(g10.get_mpz_t(), 10, static_cast<unsigned long>(guard));
        Rational approx = a_ + b_ * Rational(root, g10 * s_.den());
        return approx.decimal(digits);
    }
    // complex: render a and b*sqrt(|s|) separately with an i suffix
    Quad mag(Rational(0), b_.abs(), -s_);
    std::string re = a_.decimal(digits);
    std::string im = mag.decimal(digits);
    return re + (b_.sign() < 0 ? "-" : "+") + im + "i";
}

}  // namespace qhahn

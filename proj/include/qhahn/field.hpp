#pragma once

#include <concepts>
#include <optional>
#include <string>

#include "qhahn/quad.hpp"
#include "qhahn/rational.hpp"

namespace qhahn {

template <class F>
concept Field = requires(F a, F b) {
    F();
    F(1);
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { -a } -> std::convertible_to<F>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.is_one() } -> std::convertible_to<bool>;
    { a.str() } -> std::convertible_to<std::string>;
};

template <Field F>
F pow_int(const F& x, long e) {
    if (e == 0) return F(1);
    if (e < 0) return F(1) / pow_int(x, -e);
    F base = x, acc(1);
    long n = e;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

template <class F>
struct is_func_field : std::false_type {};

// try_sqrt: canonical exact square root in the element's own context, or
// nullopt. Sign convention: nonnegative rational part, then nonnegative
// rt-coefficient.
inline std::optional<Rational> try_sqrt(const Rational& x) {
    auto r = x.sqrt();
    if (r && r->sign() < 0) return -*r;
    return r;
}

inline std::optional<Quad> try_sqrt(const Quad& x) { return x.sqrt_in_field(); }

inline const char* field_name(const Rational&) { return "Q"; }
inline const char* field_name(const Quad&) { return "Q(rt)"; }

}  // namespace qhahn

#pragma once

#include <array>
#include <string>
#include <vector>

#include "qhahn/coeffs.hpp"

namespace qhahn {

// Map (a,b,c,d,q) to the scheme parameters of the monic Askey-Wilson family:
//   y = abcd/q^2, d1 = bc/q, d2 = cd/q, d3 = bd/q.
// The table matching the monic Askey-Wilson recurrence is the starred-variant
// one (the standard variant yields its q-reversal), so the produced ParamSet
// is starred, branch A.
template <Field F>
ParamSet<F> askey_wilson(const F& a, const F& b, const F& c, const F& d, const F& q,
                         const F& alpha1 = F(1)) {
    ParamSet<F> ps;
    ps.q = q;
    F q2 = q * q;
    ps.y = a * b * c * d / q2;
    ps.d = {ProjParam<F>(b * c / q), ProjParam<F>(c * d / q), ProjParam<F>(b * d / q)};
    ps.alpha1 = alpha1;
    ps.variant = Variant::starred;
    return ps;
}

// Solve the substitution for (a,b,c,d):
//   a = y sqrt(q/(d1 d2 d3)), b = sqrt(q d1 d3/d2), c = sqrt(q d1 d2/d3),
//   d = sqrt(q d2 d3/d1), canonical root signs.
template <Field F>
std::array<F, 4> askey_wilson_inverse(const ParamSet<F>& ps) {
    if (ps.infinite_count() != 0) throw InvalidParam("inverse needs finite parameters");
    const F &d1 = ps.d[0].value, &d2 = ps.d[1].value, &d3 = ps.d[2].value;
    if (d1.is_zero() || d2.is_zero() || d3.is_zero())
        throw InvalidParam("Askey-Wilson parameters are not defined when some d_j = 0");
    auto root = [](const F& x) {
        auto r = try_sqrt(x);
        if (!r) throw SqrtNotInField(x.str());
        return *r;
    };
    const F& q = ps.q;
    F a = ps.y.value * root(q / (d1 * d2 * d3));
    F b = root(q * d1 * d3 / d2);
    F c = root(q * d1 * d2 / d3);
    F d = root(q * d2 * d3 / d1);
    return {a, b, c, d};
}

// Monic q-Racah parameters: y = 1/(alpha beta), d1 = 1/alpha, d2 = 1/gamma,
// d3 = delta/alpha. Starred for the same reason as Askey-Wilson. The family
// is treated as generically infinite; classical finite truncation shows up as
// the finite-family flag in permissive mode.
template <Field F>
ParamSet<F> q_racah(const F& alpha, const F& beta, const F& gamma, const F& delta, const F& q,
                    const F& alpha1 = F(1)) {
    if (alpha.is_zero() || beta.is_zero() || gamma.is_zero())
        throw InvalidParam("q-Racah needs alpha, beta, gamma nonzero");
    ParamSet<F> ps;
    ps.q = q;
    ps.y = F(1) / (alpha * beta);
    ps.d = {ProjParam<F>(F(1) / alpha), ProjParam<F>(F(1) / gamma),
            ProjParam<F>(delta / alpha)};
    ps.alpha1 = alpha1;
    ps.variant = Variant::starred;
    return ps;
}

struct PresetInfo {
    std::string name;
    std::string parameters;  // the substitution this preset applies
    std::string trait;       // what the resulting coefficients look like
};

inline const std::vector<PresetInfo>& preset_catalog() {
    static const std::vector<PresetInfo> catalog = {
        {"constant", "y=1, d=(-1, r, -r) with r=sqrt(q)",
         "alpha_k = alpha1, sigma_k = sigma0, sigma0^2 = alpha1; degrees (0,0)"},
        {"half-constant", "y=q, d=(r, -r, -1) with r=sqrt(q)",
         "alpha_k = alpha1/2 for k>=2, sigma identically zero; degrees (0,0)"},
        {"sigma-zero-44", "y=1, d=(-1, 1, 1)",
         "alpha_k = [3] alpha1 [k]^4 / ([2k+1][2k-1]), sigma identically zero; degrees (4,4)"},
        {"y1-cube-zero", "y=1, d=(0, 0, 0)",
         "sigma0^2 = -[3] alpha1, t = 0 (classical q-Hahn class); degrees (3,6)"},
        {"discrete-q-hermite", "y=0, d=(inf, 0, 0), starred",
         "alpha_k = q^(k-1) [k] alpha1, beta identically zero, t = 0"},
        {"y1-generic-66", "y=1, d=(5, 7, 11) unless overridden",
         "degrees (6,6); not among the catalogued families"},
    };
    return catalog;
}

// Named parameter sets for the worked examples. Presets with an r = sqrt(q)
// slot accept only q that is a perfect square in the field.
template <Field F>
ParamSet<F> preset(const std::string& name, const F& q, const F& alpha1) {
    ParamSet<F> ps;
    ps.q = q;
    ps.alpha1 = alpha1;
    auto sqrt_q = [&]() {
        auto r = try_sqrt(q);
        if (!r)
            throw InvalidParam("preset '" + name +
                               "' needs r = sqrt(q); pass q as a perfect square (e.g. 4, 9/4)");
        return *r;
    };
    if (name == "constant") {
        F r = sqrt_q();
        ps.y = F(1);
        ps.d = {ProjParam<F>(F(-1)), ProjParam<F>(r), ProjParam<F>(-r)};
    } else if (name == "half-constant") {
        F r = sqrt_q();
        ps.y = q;
        ps.d = {ProjParam<F>(r), ProjParam<F>(-r), ProjParam<F>(F(-1))};
    } else if (name == "sigma-zero-44") {
        ps.y = F(1);
        ps.d = {ProjParam<F>(F(-1)), ProjParam<F>(F(1)), ProjParam<F>(F(1))};
    } else if (name == "y1-cube-zero") {
        ps.y = F(1);
        ps.d = {ProjParam<F>(F(0)), ProjParam<F>(F(0)), ProjParam<F>(F(0))};
    } else if (name == "discrete-q-hermite") {
        ps.y = F(0);
        ps.d = {ProjParam<F>::inf(), ProjParam<F>(F(0)), ProjParam<F>(F(0))};
        ps.variant = Variant::starred;
    } else if (name == "y1-generic-66") {
        ps.y = F(1);
        ps.d = {ProjParam<F>(F(5)), ProjParam<F>(F(7)), ProjParam<F>(F(11))};
    } else {
        throw InvalidParam("unknown preset '" + name + "' (see `qhahn families --list`)");
    }
    return ps;
}

}  // namespace qhahn

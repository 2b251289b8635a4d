#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qhahn/funcfield.hpp"
#include "qhahn/params.hpp"
#include "qhahn/ratfunc.hpp"

namespace qhahn {

// [k] = (q^k - 1)/(q - 1), k any integer; equals 1 + q + ... + q^(k-1) for k >= 1.
template <Field F>
F q_number(long k, const F& q) {
    if (q.is_one()) throw InvalidParam("q=1 inadmissible");
    return (pow_int(q, k) - F(1)) / (q - F(1));
}

template <Field F>
struct SymConstants {
    F k1, k2;
};

namespace detail {

// Parameter set with every value finite in the working field G (infinite
// parameters have already been deformed into G = RF<...> by the caller).
template <Field G>
struct FiniteParams {
    G q, y, alpha1;
    std::array<G, 3> d;
    Branch branch = Branch::A;
    Variant variant = Variant::standard;
};

template <Field G>
SymConstants<G> sym_of(const FiniteParams<G>& p) {
    const auto& d = p.d;
    G k1 = p.y + d[0] * d[1] + d[0] * d[2] + d[1] * d[2];
    G k2 = p.y * (d[0] + d[1] + d[2]) + d[0] * d[1] * d[2];
    return {k1, k2};
}

template <Field G>
bool sigma_zero_rule(const FiniteParams<G>& p, const SymConstants<G>& s) {
    if (p.branch == Branch::A) return s.k1.is_zero() && s.k2.is_zero();
    return s.k2.is_zero() && (p.y * s.k1).is_zero();
}

// Factor lists in the paper's grouping. Z keeps (x-1), (x-y), the three pairs
// and the four denominator factors; the starred forms swap the roles of the
// parameters and their reciprocals.
template <Field G>
std::pair<G, std::vector<Factor<G>>> z_factor_list(const FiniteParams<G>& p) {
    using P = Poly<G>;
    const G &q = p.q, &y = p.y;
    std::vector<Factor<G>> f;
    G scalar(1);
    if (p.variant == Variant::standard) {
        f.push_back({P::linear(G(-1), G(1)), 1});       // (x - 1)
        f.push_back({P::linear(-y, G(1)), 1});          // (x - y)
        for (const auto& dj : p.d) {
            f.push_back({P::linear(-dj, G(1)), 1});     // (x - d_j)
            f.push_back({P::linear(-y, dj), 1});        // (d_j x - y)
        }
        f.push_back({P({-q * y, G(0), G(1)}), -1});     // (x^2 - q y)
        f.push_back({P({-y, G(0), G(1)}), -2});         // (x^2 - y)^2
        f.push_back({P({-y, G(0), q}), -1});            // (q x^2 - y)
    } else {
        scalar = q * q;
        f.push_back({P::linear(G(-1), G(1)), 1});       // (x - 1)
        f.push_back({P::linear(G(-1), y), 1});          // (y x - 1)
        for (const auto& dj : p.d) {
            f.push_back({P::linear(-dj, y), 1});        // (y x - d_j)
            f.push_back({P::linear(G(-1), dj), 1});     // (d_j x - 1)
        }
        f.push_back({P({-q, G(0), y}), -1});            // (y x^2 - q)
        f.push_back({P({G(-1), G(0), y}), -2});         // (y x^2 - 1)^2
        f.push_back({P({G(-1), G(0), y * q}), -1});     // (y q x^2 - 1)
    }
    return {scalar, std::move(f)};
}

template <Field G>
std::pair<G, std::vector<Factor<G>>> v_factor_list(const FiniteParams<G>& p,
                                                   const SymConstants<G>& s) {
    using P = Poly<G>;
    const G &q = p.q, &y = p.y, &k1 = s.k1, &k2 = s.k2;
    std::vector<Factor<G>> f;
    G scalar = G(1) / (q - G(1));
    f.push_back({P::linear(G(-1), q), 1});  // (q x - 1)
    if (p.variant == Variant::standard) {
        if (p.branch == Branch::A)
            f.push_back({P::linear(-k2, k1 * q), 1});      // (k1 q x - k2)
        else
            f.push_back({P::linear(-y * k1, k2 * q), 1});  // (k2 q x - y k1)
        f.push_back({P({-y, G(0), q * q}), -1});           // (q^2 x^2 - y)
    } else {
        scalar = scalar * q;
        if (p.branch == Branch::A)
            f.push_back({P::linear(-k1, k2 * q), 1});      // (k2 q x - k1)
        else
            f.push_back({P::linear(-k2, y * k1 * q), 1});  // (y k1 q x - k2)
        f.push_back({P({G(-1), G(0), y * q * q}), -1});    // (y q^2 x^2 - 1)
    }
    return {scalar, std::move(f)};
}

// Kept-factor view: identically-zero numerator factors are excluded (they
// contribute ratio 1 by the symbolic-cancellation convention).
template <Field G>
struct KeptFactors {
    G scalar;
    std::vector<Factor<G>> kept;
    long dropped = 0;
};

template <Field G>
KeptFactors<G> keep_nonzero(std::pair<G, std::vector<Factor<G>>> sf) {
    KeptFactors<G> out{std::move(sf.first), {}, 0};
    for (auto& f : sf.second) {
        if (f.poly.is_zero()) {
            if (f.exp < 0) throw DivisionByZero();
            ++out.dropped;
            continue;
        }
        out.kept.push_back(std::move(f));
    }
    return out;
}

// {numerator*scalar, denominator} products at x0 over the kept factors.
template <Field G>
std::pair<G, G> nd_at(const KeptFactors<G>& fs, const G& x0) {
    G num = fs.scalar, den(1);
    for (const auto& f : fs.kept) {
        G v = f.poly.eval(x0);
        G& target = f.exp > 0 ? num : den;
        for (int i = 0; i < (f.exp > 0 ? f.exp : -f.exp); ++i) target = target * v;
    }
    return {num, den};
}

template <Field G>
std::pair<int, int> kept_degrees(const KeptFactors<G>& fs) {
    std::vector<Factor<G>> fcopy = fs.kept;
    auto rf = RatFunc<G>::from_factors(fs.scalar, std::move(fcopy));
    return rf.degrees();
}

// Everything build_table needs, before the square root of sigma0^2 is taken.
template <Field G>
struct RawEval {
    bool rule = false;                 // sigma identically zero
    std::pair<int, int> degree_pair;   // of the kept-factor normalized Z
    std::vector<G> alpha;              // alpha_k, k = 1..kmax
    std::vector<G> v_ratio;            // V(q^k)/V(1), k = 0..kmax; empty iff rule
    G sigma0_sq{};
    G t{};
};

// Plain pointwise evaluation. Returns nullopt when a kept factor vanishes at
// the normalization point x=q (or a pole sits on an evaluation point): the
// caller then retries with the y -> y+v deformation.
template <Field G>
std::optional<RawEval<G>> raw_eval_plain(const FiniteParams<G>& p, long kmax, bool rule,
                                         std::pair<int, int> degree_pair,
                                         bool need_sigma) {
    RawEval<G> out;
    out.rule = rule;
    out.degree_pair = degree_pair;

    KeptFactors<G> zf = keep_nonzero(z_factor_list(p));
    auto [zn_q, zd_q] = nd_at(zf, p.q);
    if (zn_q.is_zero() || zd_q.is_zero()) return std::nullopt;
    G zq = zn_q / zd_q;

    out.alpha.reserve(static_cast<size_t>(kmax));
    G qk(1);
    for (long k = 1; k <= kmax; ++k) {
        qk = qk * p.q;
        auto [zn, zd] = nd_at(zf, qk);
        if (zd.is_zero()) return std::nullopt;
        out.alpha.push_back(p.alpha1 * (zn * zd_q) / (zn_q * zd));
    }

    G ddd = p.d[0] * p.d[1] * p.d[2];
    G qm1 = p.q - G(1);
    if (p.variant == Variant::standard)
        out.t = -(p.alpha1 * qm1 * qm1 * ddd) / (p.q * p.q * zq);
    else
        out.t = -(p.alpha1 * ddd * qm1 * qm1) / zq;

    if (rule || !need_sigma) {
        out.sigma0_sq = G(0);
        return out;
    }

    KeptFactors<G> vf = keep_nonzero(v_factor_list(p, sym_of(p)));
    auto [vn_1, vd_1] = nd_at(vf, G(1));
    if (vd_1.is_zero()) return std::nullopt;
    if (vn_1.is_zero()) {
        if (p.branch == Branch::A)
            throw HypothesisError("V(1)=0: Theorem 4.1 hypothesis fails");
        throw HypothesisError("V_a(1)=0: the condition k2*q - y*k1 != 0 fails");
    }
    G v1 = vn_1 / vd_1;
    out.v_ratio.reserve(static_cast<size_t>(kmax) + 1);
    qk = G(1);
    for (long k = 0; k <= kmax; ++k) {
        if (k > 0) qk = qk * p.q;
        auto [vn, vd] = nd_at(vf, qk);
        if (vd.is_zero()) return std::nullopt;
        out.v_ratio.push_back((vn * vd_1) / (vn_1 * vd));
    }
    out.sigma0_sq = p.alpha1 * v1 * v1 / zq;
    if (p.branch == Branch::B) {
        if (p.y.is_zero()) throw InvalidParam("branch B requires y != 0");
        out.sigma0_sq = out.sigma0_sq / p.y;
    }
    return out;
}

template <Field F>
RawEval<F> specialize_raw(const RawEval<RF<F>>& r, const F& v0) {
    RawEval<F> out;
    out.rule = r.rule;
    out.degree_pair = r.degree_pair;
    try {
        for (const auto& a : r.alpha) out.alpha.push_back(a.specialize(v0));
        out.t = r.t.specialize(v0);
    } catch (const PoleError&) {
        throw NormalizationZero("deformed alpha/t evaluation has a pole at v=0");
    }
    try {
        for (const auto& v : r.v_ratio) out.v_ratio.push_back(v.specialize(v0));
        out.sigma0_sq = r.sigma0_sq.specialize(v0);
    } catch (const PoleError&) {
        throw PoleError("sigma side diverges at this parameter set (sigma0^2 has a pole)");
    }
    return out;
}

template <Field F>
FiniteParams<RF<F>> lift(const ParamSet<F>& ps, bool shift_y) {
    using R = RF<F>;
    FiniteParams<R> out;
    out.q = R::constant(ps.q);
    out.alpha1 = R::constant(ps.alpha1);
    out.branch = ps.branch;
    out.variant = ps.variant;
    R v = R::variable();
    long infs = ps.infinite_count();
    if (infs > 1)
        throw InvalidParam("at most one parameter may be infinite");
    if (infs == 1 && shift_y)
        throw NormalizationZero(
            "parameter set is degenerate at x=q and already uses the formal variable");
    auto proj = [&](const ProjParam<F>& p) -> R {
        return p.infinite ? R(1) / v : R::constant(p.value);
    };
    out.y = proj(ps.y);
    for (int i = 0; i < 3; ++i) out.d[static_cast<size_t>(i)] = proj(ps.d[static_cast<size_t>(i)]);
    if (shift_y) out.y = out.y + v;
    return out;
}

template <Field F>
void validate(const ParamSet<F>& ps, long kmax) {
    if (ps.q.is_zero()) throw InvalidParam("q=0 inadmissible");
    F p = ps.q;
    long limit = std::max(kmax * 2 + 6, 64L);
    for (long k = 1; k <= limit; ++k) {
        if (p.is_one())
            throw InvalidParam("q^" + std::to_string(k) + "=1: q must not be a root of unity");
        p = p * ps.q;
    }
    if (ps.alpha1.is_zero()) throw InvalidParam("alpha1 must be nonzero");
    if (ps.branch == Branch::B && ps.y.is_zero()) throw InvalidParam("branch B requires y != 0");
}

// Full evaluation pipeline: work in F when possible; lift to F(v) when a
// parameter is infinite or a kept factor vanishes at a needed point, and
// specialize back at v=0.
template <Field F>
RawEval<F> raw_eval(const ParamSet<F>& ps, long kmax, bool need_sigma,
                    bool* deformed = nullptr) {
    validate(ps, kmax);
    if (deformed) *deformed = false;
    if (ps.infinite_count() == 0) {
        FiniteParams<F> p{ps.q,
                          ps.y.value,
                          ps.alpha1,
                          {ps.d[0].value, ps.d[1].value, ps.d[2].value},
                          ps.branch,
                          ps.variant};
        bool rule = sigma_zero_rule(p, sym_of(p));
        auto degs = kept_degrees(keep_nonzero(z_factor_list(p)));
        if (auto r = raw_eval_plain(p, kmax, rule, degs, need_sigma)) return *r;
        // a kept factor vanished at a needed point: deform y and re-evaluate
        if (deformed) *deformed = true;
        auto lifted = lift(ps, /*shift_y=*/true);
        auto r = raw_eval_plain(lifted, kmax, rule, degs, need_sigma);
        if (!r)
            throw NormalizationZero(
                "a factor of Z vanishes at x=q even after the y-deformation");
        return specialize_raw(*r, F(0));
    }
    if (deformed) *deformed = true;
    auto lifted = lift(ps, /*shift_y=*/false);
    bool rule = sigma_zero_rule(lifted, sym_of(lifted));
    auto degs = kept_degrees(keep_nonzero(z_factor_list(lifted)));
    auto r = raw_eval_plain(lifted, kmax, rule, degs, need_sigma);
    if (!r)
        throw NormalizationZero(
            "deformed parameter set is degenerate at x=q (no second formal variable)");
    return specialize_raw(*r, F(0));
}

template <Field F>
FiniteParams<F> finite_or_throw(const ParamSet<F>& ps) {
    if (ps.infinite_count() != 0)
        throw InvalidParam("operation requires finite parameters (build a table instead)");
    return {ps.q,
            ps.y.value,
            ps.alpha1,
            {ps.d[0].value, ps.d[1].value, ps.d[2].value},
            ps.branch,
            ps.variant};
}

}  // namespace detail

// k1 = y + d1 d2 + d1 d3 + d2 d3,  k2 = y (d1 + d2 + d3) + d1 d2 d3.
template <Field F>
SymConstants<F> sym_constants(const ParamSet<F>& ps) {
    return detail::sym_of(detail::finite_or_throw(ps));
}

// The rational function Z (standard) or Z* (starred) in factored form,
// identically-zero factors included.
template <Field F>
RatFunc<F> build_Z(const ParamSet<F>& ps) {
    auto [scalar, factors] = detail::z_factor_list(detail::finite_or_throw(ps));
    return RatFunc<F>::from_factors(scalar, std::move(factors));
}

// V, V_a, V* or V_a* per branch and variant.
template <Field F>
RatFunc<F> build_V(const ParamSet<F>& ps) {
    auto p = detail::finite_or_throw(ps);
    if (ps.branch == Branch::B && p.y.is_zero())
        throw InvalidParam("branch B requires y != 0");
    auto [scalar, factors] = detail::v_factor_list(p, detail::sym_of(p));
    return RatFunc<F>::from_factors(scalar, std::move(factors));
}

// Degrees (n, m) of the reduced Z, identically-zero factors excluded; alpha_k
// is a rational function of q^k with the same degrees.
template <Field F>
std::pair<int, int> classify_degrees(const ParamSet<F>& ps) {
    if (ps.infinite_count() == 0) {
        auto p = detail::finite_or_throw(ps);
        return detail::kept_degrees(detail::keep_nonzero(detail::z_factor_list(p)));
    }
    auto lifted = detail::lift(ps, false);
    return detail::kept_degrees(detail::keep_nonzero(detail::z_factor_list(lifted)));
}

template <Field F>
F sigma0_sq(const ParamSet<F>& ps) {
    return detail::raw_eval(ps, 1, /*need_sigma=*/true).sigma0_sq;
}

template <Field F>
F t_value(const ParamSet<F>& ps) {
    return detail::raw_eval(ps, 1, /*need_sigma=*/false).t;
}

template <Field F>
F alpha_at(const ParamSet<F>& ps, long k) {
    if (k < 1) throw InvalidParam("alpha_k needs k >= 1");
    auto raw = detail::raw_eval(ps, k, /*need_sigma=*/false);
    const F& ak = raw.alpha[static_cast<size_t>(k - 1)];
    if (ps.mode == Mode::strict && ak.is_zero()) throw FiniteFamilyError(k);
    return ak;
}

namespace detail {

// sigma0 from sigma0^2: override, or the canonical root with the chosen sign.
template <Field F>
F signed_sigma0(const ParamSet<F>& ps, const F& s0sq) {
    if (ps.sigma0_override) return *ps.sigma0_override;
    auto root = try_sqrt(s0sq);
    if (!root) throw SqrtNotInField(s0sq.str());
    return ps.sigma0_sign == Sign::plus ? *root : -*root;
}

}  // namespace detail

template <Field F>
F sigma_at(const ParamSet<F>& ps, long k) {
    if (k < 0) throw InvalidParam("sigma_k needs k >= 0");
    auto raw = detail::raw_eval(ps, k, /*need_sigma=*/true);
    F s0 = detail::signed_sigma0(ps, raw.sigma0_sq);
    if (raw.rule) return ps.sigma0_override && k == 0 ? *ps.sigma0_override : F(0);
    return s0 * raw.v_ratio[static_cast<size_t>(k)];
}

template <Field F>
RecurrenceTable<F> build_table(const ParamSet<F>& ps, long kmax) {
    if (kmax < 1) throw InvalidParam("kmax >= 1 required");
    bool deformed = false;
    auto raw = detail::raw_eval(ps, kmax, /*need_sigma=*/true, &deformed);

    RecurrenceTable<F> tab;
    tab.kmax = kmax;
    tab.q = ps.q;
    tab.alpha = std::move(raw.alpha);
    tab.sigma0_sq = raw.sigma0_sq;
    tab.t = raw.t;
    tab.degree_pair = raw.degree_pair;
    tab.flags.sigma_identically_zero = raw.rule;
    tab.flags.deformed = deformed;

    for (long k = 2; k <= kmax; ++k) {
        if (tab.alpha[static_cast<size_t>(k - 1)].is_zero()) {
            if (ps.mode == Mode::strict) throw FiniteFamilyError(k);
            tab.flags.finite_family_at = k;
            break;
        }
    }

    F s0 = detail::signed_sigma0(ps, raw.sigma0_sq);
    tab.sigma.reserve(static_cast<size_t>(kmax) + 1);
    if (raw.rule) {
        tab.sigma.assign(static_cast<size_t>(kmax) + 1, F(0));
        if (ps.sigma0_override) tab.sigma[0] = *ps.sigma0_override;
    } else {
        for (long k = 0; k <= kmax; ++k)
            tab.sigma.push_back(s0 * raw.v_ratio[static_cast<size_t>(k)]);
    }
    tab.beta.reserve(static_cast<size_t>(kmax) + 1);
    tab.beta.push_back(tab.sigma[0]);
    for (long k = 1; k <= kmax; ++k)
        tab.beta.push_back(tab.sigma[static_cast<size_t>(k)] -
                           tab.sigma[static_cast<size_t>(k - 1)]);
    return tab;
}

// q-reversal: the starred forms evaluate the q -> 1/q formulas at the original
// q, so reversing is a variant toggle on the same parameters.
template <Field F>
ParamSet<F> q_reverse(const ParamSet<F>& ps) {
    ParamSet<F> out = ps;
    out.variant = ps.variant == Variant::standard ? Variant::starred : Variant::standard;
    return out;
}

// ---------------------------------------------------------------------------
// Initial-data route: the scalar solution of the quadratic matrix equation in
// terms of alpha_1, sigma_0, sigma_1, sigma_2 and t.

template <Field F>
struct AuxConstants {
    F c0, c1, c2;
    F q;
    // g(k) = [k-2] c0 + c1
    F g(long k) const { return q_number(k - 2, q) * c0 + c1; }
    F g_checked(long k) const {
        F v = g(k);
        if (v.is_zero()) throw VanishingG(k);
        return v;
    }
};

// c0 = [3](q sigma0 - sigma1) + sigma2, c1 = [3](sigma0 + sigma1 - sigma2),
// c2 = [4] sigma0 sigma2 - [3] sigma0 sigma1 - q^2 sigma1 sigma2.
template <Field F>
AuxConstants<F> aux_constants(const F& s0, const F& s1, const F& s2, const F& q) {
    F three = q_number(3, q), four = q_number(4, q);
    return {three * (q * s0 - s1) + s2, three * (s0 + s1 - s2),
            four * s0 * s2 - three * s0 * s1 - q * q * s1 * s2, q};
}

// sigma_k = [k+1]([k] c2/q + sigma0 g(1)) / g(2k+1).
template <Field F>
F sigma_from_initial(const AuxConstants<F>& a, const F& s0, const F& q, long k) {
    F den = a.g_checked(2 * k + 1);
    return q_number(k + 1, q) * (q_number(k, q) * a.c2 / q + s0 * a.g(1)) / den;
}

// alpha_k = q [k] g(k-1) / (g(2k) g(2k-2)) * (q^(k-2) g(2) alpha1 + [k-1] g(k) W(k)),
// W(k) = q^(k-3)((q^(k-1)+1) s0 c0 - c2)((s0 c0 - c2) q^(k-2) + s0(c0 - (q-1)c1)) / g(2k-1)^2 - t.
template <Field F>
F alpha_from_initial(const AuxConstants<F>& a, const F& alpha1, const F& s0, const F& t,
                     const F& q, long k) {
    if (k < 1) throw InvalidParam("alpha_k needs k >= 1");
    F g2k = a.g_checked(2 * k), g2km2 = a.g_checked(2 * k - 2), g2km1 = a.g_checked(2 * k - 1);
    F W = pow_int(q, k - 3) * ((pow_int(q, k - 1) + F(1)) * s0 * a.c0 - a.c2) *
              ((s0 * a.c0 - a.c2) * pow_int(q, k - 2) + s0 * (a.c0 - (q - F(1)) * a.c1)) /
              (g2km1 * g2km1) -
          t;
    return q * q_number(k, q) * a.g(k - 1) / (g2k * g2km2) *
           (pow_int(q, k - 2) * a.g(2) * alpha1 + q_number(k - 1, q) * a.g(k) * W);
}

// ---------------------------------------------------------------------------
// Coefficients of the companion matrix M.

template <Field F>
struct TildeCoeffs {
    std::vector<F> sigma;  // sigma~_k, k = 0..count-1
    std::vector<F> alpha;  // alpha~_k, k = 1..count-1
    std::vector<F> beta() const {
        std::vector<F> b;
        b.reserve(sigma.size());
        for (size_t k = 0; k < sigma.size(); ++k)
            b.push_back(k == 0 ? sigma[0] : sigma[k] - sigma[k - 1]);
        return b;
    }
};

// sigma~_k = [k+1]/[k+2] sigma_{k+1};
// alpha~_k = [k] g(k+1) / (q [k+1] g(k)) alpha_{k+1} when the g's are nonzero,
// otherwise the unique solution of the scalar equations, which needs t:
//   [k+2] beta~_k = [k+1](beta_k + beta_{k+1}) - (q+1)[k] beta_k + q [k] beta~_{k-1}
//   [k+2] alpha~_k = [k](alpha_k + beta_k^2 + alpha_{k+1})
//                    - (q+1)([k-1] alpha_k + [k] beta_k beta~_{k-1})
//                    + q [k](alpha~_{k-1} + beta~_{k-1}^2) - t [k].
template <Field F>
TildeCoeffs<F> tilde_coeffs(const RecurrenceTable<F>& tab, const AuxConstants<F>& aux,
                            const F& q, long count) {
    if (count > tab.kmax)
        throw TruncationError("tilde coefficients to " + std::to_string(count) +
                              " need a table of kmax >= " + std::to_string(count));
    TildeCoeffs<F> out;
    for (long k = 0; k + 1 <= tab.kmax && k < count; ++k)
        out.sigma.push_back(q_number(k + 1, q) / q_number(k + 2, q) *
                            tab.sigma[static_cast<size_t>(k + 1)]);

    bool g_ok = true;
    for (long k = 1; k <= count && g_ok; ++k)
        if (aux.g(k).is_zero()) g_ok = false;
    if (g_ok) {
        for (long k = 1; k + 1 <= tab.kmax && k < count; ++k)
            out.alpha.push_back(q_number(k, q) * aux.g(k + 1) /
                                (q * q_number(k + 1, q) * aux.g(k)) *
                                tab.alpha[static_cast<size_t>(k)]);
        return out;
    }
    auto betat = out.beta();
    F prev(0);
    for (long k = 1; k + 1 <= tab.kmax && k < count; ++k) {
        F bk = tab.beta[static_cast<size_t>(k)];
        F btm1 = k - 1 < static_cast<long>(betat.size()) ? betat[static_cast<size_t>(k - 1)] : F(0);
        F v = (q_number(k, q) * (tab.alpha[static_cast<size_t>(k - 1)] + bk * bk +
                                 tab.alpha[static_cast<size_t>(k)]) -
               (q + F(1)) * (q_number(k - 1, q) * tab.alpha[static_cast<size_t>(k - 1)] +
                             q_number(k, q) * bk * btm1) +
               q * q_number(k, q) * (prev + btm1 * btm1) - tab.t * q_number(k, q)) /
              q_number(k + 2, q);
        out.alpha.push_back(v);
        prev = v;
    }
    return out;
}

template <Field F>
TildeCoeffs<F> tilde_coeffs(const RecurrenceTable<F>& tab, const F& q, long count) {
    auto aux = aux_constants(tab.sigma[0], tab.sigma[1], tab.sigma[2], q);
    return tilde_coeffs(tab, aux, q, count);
}

}  // namespace qhahn

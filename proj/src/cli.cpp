#include "qhahn/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qhahn/families.hpp"
#include "qhahn/qmatrix.hpp"
#include "qhahn/render.hpp"

namespace qhahn::cli {
namespace {

struct Opts {
    std::optional<std::string> q, y, d, alpha1, branch, variant, sign, sigma0_override, preset;
    std::string mode = "strict";
    std::string format = "table";
    std::string adjoin;
    int decimals = -1;
    long kmax = 8;
    long order = 12;
    std::optional<std::string> t_override;
    std::string dump;
    bool show_zv = false;
    bool list = false;
};

void add_param_flags(CLI::App* cmd, Opts& o) {
    cmd->add_option("--q", o.q, "base q (rational 'n/d', or 'a+b*rt' with --adjoin)");
    cmd->add_option("--y", o.y, "parameter y ('inf' allowed)");
    cmd->add_option("--d", o.d, "comma-separated d1,d2,d3 ('inf' allowed once)");
    cmd->add_option("--alpha1", o.alpha1, "scale alpha_1 (nonzero)");
    cmd->add_option("--branch", o.branch, "sigma branch: A or B")
        ->check(CLI::IsMember({"A", "B"}));
    cmd->add_option("--variant", o.variant, "standard or starred (q-reversed forms)")
        ->check(CLI::IsMember({"standard", "starred"}));
    cmd->add_option("--sign", o.sign, "sigma0 sign: plus or minus")
        ->check(CLI::IsMember({"plus", "minus"}));
    cmd->add_option("--sigma0-override", o.sigma0_override,
                    "use this sigma0 instead of the square root");
    cmd->add_option("--preset", o.preset, "named parameter set (see `families --list`)");
    cmd->add_option("--adjoin", o.adjoin, "work in Q(rt) with rt^2 = this rational");
    cmd->add_option("--mode", o.mode, "strict or permissive (env QHAHN_MODE)")
        ->check(CLI::IsMember({"strict", "permissive"}));
    cmd->add_option("--format", o.format, "table, csv or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    cmd->add_option("--decimals", o.decimals, "add decimal rendering columns (display only)");
}

template <class F>
struct FieldCtx;

template <>
struct FieldCtx<Rational> {
    Rational parse(const std::string& s) const {
        auto r = Rational::parse(s);
        if (!r) throw ParseError("bad rational '" + s + "' (use n or n/d)");
        return *r;
    }
};

template <>
struct FieldCtx<Quad> {
    Rational radicand;
    Quad parse(const std::string& s) const {
        auto r = Quad::parse(s, radicand);
        if (!r) throw ParseError("bad scalar '" + s + "' (use n/d or a+b*rt)");
        return *r;
    }
};

template <class F>
ProjParam<F> parse_proj(const FieldCtx<F>& ctx, const std::string& s) {
    if (s == "inf") return ProjParam<F>::inf();
    return ProjParam<F>(ctx.parse(s));
}

template <class F>
ParamSet<F> make_params(const Opts& o, const FieldCtx<F>& ctx) {
    ParamSet<F> ps;
    bool have = false;
    if (o.preset) {
        if (!o.q) throw InvalidParam("--preset needs --q");
        F q = ctx.parse(*o.q);
        F a1 = o.alpha1 ? ctx.parse(*o.alpha1) : F(1);
        ps = preset(*o.preset, q, a1);
        have = true;
    }
    if (o.q) ps.q = ctx.parse(*o.q);
    if (o.y) {
        ps.y = parse_proj(ctx, *o.y);
        have = true;
    }
    if (o.d) {
        auto s = *o.d;
        std::array<std::string, 3> parts;
        size_t pos = 0;
        for (int i = 0; i < 3; ++i) {
            size_t comma = s.find(',', pos);
            if (i < 2 && comma == std::string::npos)
                throw InvalidParam("--d needs three comma-separated values");
            parts[static_cast<size_t>(i)] =
                s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            pos = comma + 1;
        }
        long infs = 0;
        for (int i = 0; i < 3; ++i) {
            ps.d[static_cast<size_t>(i)] = parse_proj(ctx, parts[static_cast<size_t>(i)]);
            infs += ps.d[static_cast<size_t>(i)].infinite ? 1 : 0;
        }
        (void)infs;
        have = true;
    }
    if (!have) throw InvalidParam("no parameters: pass --preset or --y/--d");
    if (!o.q) throw InvalidParam("--q is required");
    if (!o.preset && !o.alpha1)
        throw InvalidParam("--alpha1 is required when parameters are given explicitly");
    if (o.alpha1) ps.alpha1 = ctx.parse(*o.alpha1);
    if (o.branch) ps.branch = *o.branch == "B" ? Branch::B : Branch::A;
    if (o.variant)
        ps.variant = *o.variant == "starred" ? Variant::starred : Variant::standard;
    if (o.sign) ps.sigma0_sign = *o.sign == "minus" ? Sign::minus : Sign::plus;
    if (o.sigma0_override) ps.sigma0_override = ctx.parse(*o.sigma0_override);
    ps.mode = o.mode == "permissive" ? Mode::permissive : Mode::strict;
    return ps;
}

template <class F>
std::string maybe_dec(const F& v, int decimals) {
    return decimals >= 0 ? v.decimal(decimals) : std::string();
}

template <class F>
void header_common(TableDoc& doc, const ParamSet<F>& ps) {
    doc.header.emplace_back("q", ps.q.str());
    doc.header.emplace_back("y", ps.y.str());
    doc.header.emplace_back("d", ps.d[0].str() + "," + ps.d[1].str() + "," + ps.d[2].str());
    doc.header.emplace_back("alpha1", ps.alpha1.str());
    doc.header.emplace_back("branch", to_string(ps.branch));
    doc.header.emplace_back("variant", to_string(ps.variant));
    doc.header.emplace_back("mode", to_string(ps.mode));
}

std::string degrees_str(std::pair<int, int> deg) {
    auto one = [](int d) {
        return d == Poly<Rational>::kNegInf ? std::string("-inf") : std::to_string(d);
    };
    return "(" + one(deg.first) + "," + one(deg.second) + ")";
}

void emit(const TableDoc& doc, const std::string& format) {
    if (format == "csv")
        std::cout << render_csv(doc);
    else if (format == "json")
        std::cout << render_json(doc);
    else
        std::cout << render_text(doc);
}

template <class F>
int cmd_coeffs(const Opts& o, const FieldCtx<F>& ctx) {
    auto ps = make_params(o, ctx);
    auto tab = build_table(ps, o.kmax);
    TableDoc doc;
    header_common(doc, ps);
    doc.header.emplace_back("sigma0_sign", to_string(ps.sigma0_sign));
    doc.header.emplace_back("sigma0_sq", tab.sigma0_sq.str());
    doc.header.emplace_back("sigma0", tab.sigma_at(0).str());
    doc.header.emplace_back("t", tab.t.str());
    doc.header.emplace_back("degrees", degrees_str(tab.degree_pair));
    doc.header.emplace_back("sigma_identically_zero",
                            tab.flags.sigma_identically_zero ? "true" : "false");
    if (tab.flags.finite_family_at)
        doc.header.emplace_back("finite_family_at", std::to_string(*tab.flags.finite_family_at));
    if (tab.flags.deformed) doc.header.emplace_back("deformed_evaluation", "true");
    if (o.show_zv && ps.infinite_count() == 0) {
        auto Z = build_Z(ps);
        doc.header.emplace_back("Z_num", Z.num().str());
        doc.header.emplace_back("Z_den", Z.den().str());
        if (!tab.flags.sigma_identically_zero) {
            auto V = build_V(ps);
            doc.header.emplace_back("V_num", V.num().str());
            doc.header.emplace_back("V_den", V.den().str());
        }
    }
    doc.columns = {"k", "alpha", "beta", "sigma"};
    bool dec = o.decimals >= 0;
    if (dec) {
        doc.columns.push_back("alpha_dec");
        doc.columns.push_back("beta_dec");
        doc.columns.push_back("sigma_dec");
    }
    for (long k = 0; k <= tab.kmax; ++k) {
        std::vector<std::string> row{std::to_string(k),
                                     k >= 1 ? tab.alpha_at(k).str() : std::string("-"),
                                     tab.beta_at(k).str(), tab.sigma_at(k).str()};
        if (dec) {
            row.push_back(k >= 1 ? maybe_dec(tab.alpha_at(k), o.decimals) : std::string("-"));
            row.push_back(maybe_dec(tab.beta_at(k), o.decimals));
            row.push_back(maybe_dec(tab.sigma_at(k), o.decimals));
        }
        doc.rows.push_back(std::move(row));
    }
    emit(doc, o.format);
    return 0;
}

template <class F>
int cmd_verify(const Opts& o, const FieldCtx<F>& ctx) {
    auto ps = make_params(o, ctx);
    long n = o.order;
    long gram_kmax = 8;
    long table_k = std::max({n + 8, 2 * gram_kmax + 1, n + 8});
    auto tab = build_table(ps, table_k);
    if (o.t_override) tab.t = ctx.parse(*o.t_override);
    auto L = tridiagonal_L(tab, n + 4);
    auto M = tridiagonal_M(tab, n + 4);
    auto R = residual_quadratic(L, M, tab.t, ps.q, n);
    auto nz = R.first_nonzero_on(n);

    TableDoc doc;
    header_common(doc, ps);
    doc.header.emplace_back("order", std::to_string(n));
    doc.header.emplace_back("t", tab.t.str());
    bool ok = !nz.has_value();
    doc.header.emplace_back("residual_quadratic",
                            ok ? "0"
                               : "nonzero at (" + std::to_string(std::get<0>(*nz)) + "," +
                                     std::to_string(std::get<1>(*nz)) +
                                     ") = " + std::get<2>(*nz).str());
    auto gr = gram_check(tab, gram_kmax);
    doc.header.emplace_back(
        "gram", gr.ok ? "diagonal, gamma_k = alpha_1..alpha_k (kmax=8)"
                      : "violation at (" + std::to_string(gr.violation->j) + "," +
                            std::to_string(gr.violation->k) + "): expected " +
                            gr.violation->expected + ", got " + gr.violation->actual);
    ok = ok && gr.ok;
    if (tab.t.is_zero()) {
        auto hr = hahn_transform_check(tab, ps.q, std::min(n, table_k - 7));
        doc.header.emplace_back("hahn_transform",
                                hr.residual_zero ? "0 (classical q-Hahn class)" : "nonzero");
        ok = ok && hr.residual_zero;
    }
    doc.header.emplace_back("verdict", ok ? "verified" : "FAILED");
    emit(doc, o.format);
    if (!o.dump.empty()) {
        if (o.dump == "residual")
            std::cout << R.dump(n);
        else if (o.dump == "L")
            std::cout << L.dump(n);
        else if (o.dump == "M")
            std::cout << M.dump(n);
        else
            throw InvalidParam("--dump takes residual, L or M");
    }
    return ok ? 0 : 1;
}

template <class F>
int cmd_classify(const Opts& o, const FieldCtx<F>& ctx) {
    auto ps = make_params(o, ctx);
    auto deg = classify_degrees(ps);
    TableDoc doc;
    header_common(doc, ps);
    doc.header.emplace_back("degrees", degrees_str(deg));
    std::string match = "not in catalog", note;
    if (deg == std::pair<int, int>(8, 8)) {
        match = "askey-wilson / q-racah shape";
    } else if (deg == std::pair<int, int>(0, 0)) {
        match = "constant-type (constant, half-constant presets)";
    } else if (deg == std::pair<int, int>(4, 4)) {
        match = "y=1, d1=-1 family (sigma-zero-44 shape)";
        note = "possibly new";
    } else if (deg == std::pair<int, int>(6, 6)) {
        match = "y=1 generic family (y1-generic-66 shape)";
        note = "possibly new";
    } else if (deg == std::pair<int, int>(3, 6)) {
        match = "y1-cube-zero shape";
    }
    doc.header.emplace_back("catalog_match", match);
    if (!note.empty()) doc.header.emplace_back("note", note);
    emit(doc, o.format);
    return 0;
}

template <class F>
int cmd_poly(const Opts& o, const FieldCtx<F>& ctx) {
    auto ps = make_params(o, ctx);
    auto tab = build_table(ps, std::max(o.kmax, 1L));
    auto seq = recurrence_polys(tab, o.kmax);
    TableDoc doc;
    header_common(doc, ps);
    if (o.format == "table") {
        for (long k = 0; k <= o.kmax; ++k)
            doc.header.emplace_back("p_" + std::to_string(k),
                                    seq.rows[static_cast<size_t>(k)].str());
        emit(doc, o.format);
        return 0;
    }
    doc.columns = {"k", "coefficients"};
    for (long k = 0; k <= o.kmax; ++k) {
        std::string cs;
        for (int i = 0; i <= static_cast<int>(k); ++i) {
            if (i) cs += ";";
            cs += seq.rows[static_cast<size_t>(k)].coeff(i).str();
        }
        doc.rows.push_back({std::to_string(k), cs});
    }
    emit(doc, o.format);
    return 0;
}

template <class F>
int cmd_reverse(const Opts& o, const FieldCtx<F>& ctx) {
    auto ps = make_params(o, ctx);
    auto rev = q_reverse(ps);
    TableDoc doc;
    header_common(doc, ps);
    doc.header.emplace_back("t", t_value(ps).str());
    doc.header.emplace_back("t_reversed", t_value(rev).str());
    bool alpha_inv = true;
    doc.columns = {"k", "alpha", "alpha_rev", "alpha_equal", "sigma", "sigma_rev"};
    auto sigma_str = [](const ParamSet<F>& p, long k) -> std::string {
        try {
            return sigma_at(p, k).str();
        } catch (const SqrtNotInField& e) {
            return "needs --adjoin " + e.radicand();
        }
    };
    for (long k = 1; k <= o.kmax; ++k) {
        F a = alpha_at(ps, k), ar = alpha_at(rev, k);
        if (!(a == ar)) alpha_inv = false;
        doc.rows.push_back({std::to_string(k), a.str(), ar.str(), a == ar ? "yes" : "no",
                            sigma_str(ps, k), sigma_str(rev, k)});
    }
    doc.header.emplace_back("alpha_invariant", alpha_inv ? "yes" : "no");
    emit(doc, o.format);
    return 0;
}

int cmd_families(const Opts& o) {
    TableDoc doc;
    doc.columns = {"name", "parameters", "behavior"};
    for (const auto& p : preset_catalog()) doc.rows.push_back({p.name, p.parameters, p.trait});
    emit(doc, o.format);
    return 0;
}

template <class F>
int dispatch_field(const std::string& cmd, const Opts& o, const FieldCtx<F>& ctx) {
    if (cmd == "coeffs") return cmd_coeffs(o, ctx);
    if (cmd == "verify") return cmd_verify(o, ctx);
    if (cmd == "classify") return cmd_classify(o, ctx);
    if (cmd == "poly") return cmd_poly(o, ctx);
    if (cmd == "reverse") return cmd_reverse(o, ctx);
    throw InvalidParam("unknown command " + cmd);
}

int dispatch(const std::string& cmd, const Opts& o) {
    if (cmd == "families") return cmd_families(o);
    if (o.adjoin.empty()) return dispatch_field(cmd, o, FieldCtx<Rational>{});
    auto s = Rational::parse(o.adjoin);
    if (!s) throw ParseError("--adjoin needs a rational radicand");
    return dispatch_field(cmd, o, FieldCtx<Quad>{*s});
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"exact recurrence coefficients for the extended q-Hahn class"};
    app.require_subcommand(1);
    Opts o;
    if (const char* env = std::getenv("QHAHN_MODE")) {
        std::string m(env);
        if (m == "permissive" || m == "strict") o.mode = m;
    }

    auto* coeffs = app.add_subcommand("coeffs", "emit alpha_k, beta_k, sigma_k");
    add_param_flags(coeffs, o);
    coeffs->add_option("--kmax", o.kmax, "number of coefficients");
    coeffs->add_flag("--show-zv", o.show_zv, "include the Z and V rational functions");

    auto* verify = app.add_subcommand("verify", "check the quadratic matrix equation and orthogonality");
    add_param_flags(verify, o);
    verify->add_option("--order", o.order, "verification order N");
    verify->add_option("--t-override", o.t_override, "verify with this t instead");
    verify->add_option("--dump", o.dump, "print a matrix as sparse triples: residual, L or M");

    auto* classify = app.add_subcommand("classify", "degree pair of Z and catalog match");
    add_param_flags(classify, o);

    auto* poly = app.add_subcommand("poly", "emit the monic orthogonal polynomials");
    add_param_flags(poly, o);
    poly->add_option("--kmax", o.kmax, "highest degree");

    auto* reverse = app.add_subcommand("reverse", "compare a table with its q-reversal");
    add_param_flags(reverse, o);
    reverse->add_option("--kmax", o.kmax, "number of coefficients");

    auto* families = app.add_subcommand("families", "preset catalog");
    families->add_flag("--list", o.list, "list presets");
    families->add_option("--format", o.format, "table, csv or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return dispatch(app.get_subcommands().front()->get_name(), o);
    } catch (const FiniteFamilyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace qhahn::cli

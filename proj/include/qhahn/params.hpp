#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qhahn/field.hpp"

namespace qhahn {

enum class Branch { A, B };
enum class Variant { standard, starred };
enum class Sign { plus, minus };
enum class Mode { strict, permissive };

inline const char* to_string(Branch b) { return b == Branch::A ? "A" : "B"; }
inline const char* to_string(Variant v) { return v == Variant::standard ? "standard" : "starred"; }
inline const char* to_string(Sign s) { return s == Sign::plus ? "plus" : "minus"; }
inline const char* to_string(Mode m) { return m == Mode::strict ? "strict" : "permissive"; }

// Projective parameter: a finite field value or the point at infinity.
// An infinite parameter is evaluated as 1/v over F(v) and specialized at v=0.
template <Field F>
struct ProjParam {
    F value{};
    bool infinite = false;

    ProjParam() = default;
    ProjParam(F v) : value(std::move(v)) {}  // NOLINT: implicit finite embedding
    static ProjParam inf() {
        ProjParam p;
        p.infinite = true;
        return p;
    }
    bool is_zero() const { return !infinite && value.is_zero(); }
    std::string str() const { return infinite ? "inf" : value.str(); }
};

template <Field F>
struct ParamSet {
    F q{};
    ProjParam<F> y{};
    std::array<ProjParam<F>, 3> d{};
    F alpha1{1};
    Branch branch = Branch::A;
    Variant variant = Variant::standard;
    Sign sigma0_sign = Sign::plus;
    std::optional<F> sigma0_override;
    Mode mode = Mode::strict;

    long infinite_count() const {
        long n = y.infinite ? 1 : 0;
        for (const auto& dj : d) n += dj.infinite ? 1 : 0;
        return n;
    }
};

struct TableFlags {
    bool sigma_identically_zero = false;
    std::optional<long> finite_family_at;
    bool deformed = false;  // a formal-variable lift was used in the evaluation
};

// Finite prefix of one coefficient table: alpha_1..alpha_kmax, sigma_0..sigma_kmax,
// beta_0..beta_kmax with beta_0 = sigma_0 and beta_k = sigma_k - sigma_{k-1}.
template <Field F>
struct RecurrenceTable {
    long kmax = 0;
    std::vector<F> alpha;  // alpha[k-1] = alpha_k
    std::vector<F> sigma;  // sigma[k]
    std::vector<F> beta;   // beta[k]
    F sigma0_sq{};
    F t{};
    std::pair<int, int> degree_pair{0, 0};
    TableFlags flags;
    F q{};  // the q the table was built at

    const F& alpha_at(long k) const { return alpha.at(static_cast<size_t>(k - 1)); }
    const F& sigma_at(long k) const { return sigma.at(static_cast<size_t>(k)); }
    const F& beta_at(long k) const { return beta.at(static_cast<size_t>(k)); }
};

}  // namespace qhahn

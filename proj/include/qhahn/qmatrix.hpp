#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qhahn/coeffs.hpp"

namespace qhahn {

// Truncated lower semi-matrix with a declared diagonal band. Diagonal index
// i = j - k (positive below the main diagonal, per the semi-matrix
// convention). Entries with row and column below exact_dim() agree with the
// untruncated semi-infinite matrix; products shrink that region by the band
// interaction and the shrink is tracked, so a verification never reads a
// corrupted edge entry silently.
template <Field F>
class BandedMatrix {
public:
    BandedMatrix(int lo, int hi, long size, long exact_dim)
        : lo_(lo), hi_(hi), size_(size), exact_(std::min(exact_dim, size)) {
        if (lo > hi || size <= 0) throw InvalidParam("bad band");
        diags_.resize(static_cast<size_t>(hi - lo + 1));
        for (int i = lo; i <= hi; ++i) {
            long len = size_ - std::abs(static_cast<long>(i));
            diags_[static_cast<size_t>(i - lo)].assign(len > 0 ? static_cast<size_t>(len) : 0,
                                                       F(0));
        }
    }

    static BandedMatrix identity(long size) {
        BandedMatrix m(0, 0, size, size);
        for (long t = 0; t < size; ++t) m.set(t, t, F(1));
        return m;
    }

    int band_lo() const { return lo_; }
    int band_hi() const { return hi_; }
    long size() const { return size_; }
    long exact_dim() const { return exact_; }

    F get(long j, long k) const {
        if (j < 0 || k < 0 || j >= size_ || k >= size_) return F(0);
        int i = static_cast<int>(j - k);
        if (i < lo_ || i > hi_) return F(0);
        return diags_[static_cast<size_t>(i - lo_)][static_cast<size_t>(std::min(j, k))];
    }

    void set(long j, long k, F v) {
        int i = static_cast<int>(j - k);
        if (i < lo_ || i > hi_) throw InvalidParam("entry outside declared band");
        diags_[static_cast<size_t>(i - lo_)][static_cast<size_t>(std::min(j, k))] = std::move(v);
    }

    BandedMatrix operator-() const {
        BandedMatrix r = *this;
        for (auto& d : r.diags_)
            for (auto& v : d) v = -v;
        return r;
    }

    friend BandedMatrix operator+(const BandedMatrix& a, const BandedMatrix& b) {
        BandedMatrix r(std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_),
                       std::min(a.size_, b.size_), std::min(a.exact_, b.exact_));
        r.for_band([&](long j, long k, F& v) { v = a.get(j, k) + b.get(j, k); });
        return r;
    }
    friend BandedMatrix operator-(const BandedMatrix& a, const BandedMatrix& b) {
        return a + (-b);
    }
    friend BandedMatrix operator*(const F& s, const BandedMatrix& a) {
        BandedMatrix r = a;
        for (auto& d : r.diags_)
            for (auto& v : d) v = s * v;
        return r;
    }

    // Exact product on the provably exact region: entry (j,k) sums over
    // m <= min(j - lo_A, k + hi_B), so the region shrinks by
    // max(0, min(-lo_A, hi_B)).
    friend BandedMatrix operator*(const BandedMatrix& a, const BandedMatrix& b) {
        long size = std::min(a.size_, b.size_);
        long shrink = std::max(
            0L, std::min(static_cast<long>(-a.lo_), static_cast<long>(b.hi_)));
        long exact = std::min(a.exact_, b.exact_) - shrink;
        BandedMatrix r(a.lo_ + b.lo_, a.hi_ + b.hi_, size, exact);
        r.for_band([&](long j, long k, F& v) {
            long m_lo = std::max({0L, j - static_cast<long>(a.hi_), k + static_cast<long>(b.lo_)});
            long m_hi = std::min({size - 1, j - static_cast<long>(a.lo_),
                                  k + static_cast<long>(b.hi_)});
            F acc(0);
            for (long m = m_lo; m <= m_hi; ++m) acc = acc + a.get(j, m) * b.get(m, k);
            v = std::move(acc);
        });
        return r;
    }

    // First nonzero entry with row, col < n, or nullopt. Requires the region
    // to be provably exact.
    std::optional<std::tuple<long, long, F>> first_nonzero_on(long n) const {
        if (n > exact_)
            throw TruncationError("requested order " + std::to_string(n) +
                                  " exceeds exact region " + std::to_string(exact_));
        for (long j = 0; j < n; ++j) {
            for (long k = std::max(0L, j - hi_); k <= std::min(n - 1, j - lo_); ++k) {
                F v = get(j, k);
                if (!v.is_zero()) return std::make_tuple(j, k, v);
            }
        }
        return std::nullopt;
    }

    bool is_zero_on(long n) const { return !first_nonzero_on(n).has_value(); }

    // Row-major sparse triples "j k value" over the exact region.
    std::string dump(long n) const {
        std::string out;
        for (long j = 0; j < std::min(n, exact_); ++j)
            for (long k = std::max(0L, j - hi_); k <= std::min(std::min(n, exact_) - 1, j - lo_);
                 ++k) {
                F v = get(j, k);
                if (!v.is_zero())
                    out += std::to_string(j) + " " + std::to_string(k) + " " + v.str() + "\n";
            }
        return out;
    }

private:
    int lo_, hi_;
    long size_, exact_;
    std::vector<std::vector<F>> diags_;

    template <class Fn>
    void for_band(Fn&& fn) {
        for (int i = lo_; i <= hi_; ++i) {
            auto& d = diags_[static_cast<size_t>(i - lo_)];
            for (long t = 0; t < static_cast<long>(d.size()); ++t) {
                long j = t + std::max(i, 0);
                long k = t + std::max(-i, 0);
                fn(j, k, d[static_cast<size_t>(t)]);
            }
        }
    }
};

enum class OperatorKind { Dq, DqHat, X };

// D_q has [k+1] on the first subdiagonal, its left inverse D^_q has 1/[k+1] on
// the first superdiagonal, X has ones on the first superdiagonal.
template <Field F>
BandedMatrix<F> build_operator(OperatorKind kind, const F& q, long n) {
    if (n < 2) throw InvalidParam("operator truncation needs N >= 2");
    switch (kind) {
        case OperatorKind::Dq: {
            BandedMatrix<F> m(1, 1, n, n);
            for (long k = 0; k + 1 < n; ++k) m.set(k + 1, k, q_number(k + 1, q));
            return m;
        }
        case OperatorKind::DqHat: {
            BandedMatrix<F> m(-1, -1, n, n);
            for (long k = 0; k + 1 < n; ++k) m.set(k, k + 1, F(1) / q_number(k + 1, q));
            return m;
        }
        case OperatorKind::X: {
            BandedMatrix<F> m(-1, -1, n, n);
            for (long k = 0; k + 1 < n; ++k) m.set(k, k + 1, F(1));
            return m;
        }
    }
    throw InvalidParam("unknown operator kind");
}

// (-1,1)-banded matrix with ones above the diagonal, beta on it and alpha
// below; used for both L and M.
template <Field F>
BandedMatrix<F> build_tridiagonal(const std::vector<F>& alpha, const std::vector<F>& beta,
                                  long n) {
    if (static_cast<long>(alpha.size()) < n - 1 || static_cast<long>(beta.size()) < n)
        throw InvalidParam("coefficient sequences shorter than the truncation order");
    BandedMatrix<F> m(-1, 1, n, n);
    for (long j = 0; j < n; ++j) {
        m.set(j, j, beta[static_cast<size_t>(j)]);
        if (j + 1 < n) {
            m.set(j, j + 1, F(1));
            m.set(j + 1, j, alpha[static_cast<size_t>(j)]);
        }
    }
    return m;
}

template <Field F>
BandedMatrix<F> tridiagonal_L(const RecurrenceTable<F>& tab, long n) {
    return build_tridiagonal(tab.alpha, tab.beta, n);
}

template <Field F>
BandedMatrix<F> tridiagonal_M(const RecurrenceTable<F>& tab, long n) {
    auto tc = tilde_coeffs(tab, tab.q, n + 1);
    return build_tridiagonal(tc.alpha, tc.beta(), n);
}

// Residual of the quadratic matrix equation:
//   R = L^2 D_q - (q+1) L D_q M + q D_q M^2 - t D_q.
// The caller asserts R = 0 on the exact region of size >= N.
template <Field F>
BandedMatrix<F> residual_quadratic(const BandedMatrix<F>& L, const BandedMatrix<F>& M,
                                   const F& t, const F& q, long n) {
    if (L.size() < n + 4 || M.size() < n + 4)
        throw TruncationError("residual at order " + std::to_string(n) +
                              " needs matrices of size >= N + 4");
    long big = std::min(L.size(), M.size());
    auto D = build_operator<F>(OperatorKind::Dq, q, big);
    auto R = L * L * D - (q + F(1)) * ((L * D) * M) + q * ((D * M) * M) - t * D;
    if (R.exact_dim() < n)
        throw TruncationError("band growth ate the requested region; enlarge the inputs");
    return R;
}

// Monic polynomial sequence from the three-term recurrence
//   p_{k+1} = (x - beta_k) p_k - alpha_k p_{k-1}.
template <Field F>
struct MonicPolySeq {
    std::vector<Poly<F>> rows;  // rows[k] = p_k

    // The coefficient matrix A (a_{k,j} = coeff of x^j in p_k), lower
    // triangular with unit diagonal; satisfies L A = A X.
    BandedMatrix<F> matrix() const {
        long n = static_cast<long>(rows.size());
        BandedMatrix<F> A(0, static_cast<int>(n - 1), n, n);
        for (long k = 0; k < n; ++k)
            for (long j = 0; j <= k; ++j) A.set(k, j, rows[static_cast<size_t>(k)].coeff(static_cast<int>(j)));
        return A;
    }
};

template <Field F>
MonicPolySeq<F> recurrence_polys(const std::vector<F>& alpha, const std::vector<F>& beta,
                                 long kmax) {
    if (kmax < 1) throw InvalidParam("kmax >= 1 required");
    if (static_cast<long>(alpha.size()) < kmax - 1 || static_cast<long>(beta.size()) < kmax)
        throw InvalidParam("coefficient sequences shorter than kmax");
    MonicPolySeq<F> seq;
    seq.rows.reserve(static_cast<size_t>(kmax) + 1);
    seq.rows.push_back(Poly<F>::constant(F(1)));
    seq.rows.push_back(Poly<F>::linear(-beta[0], F(1)));
    for (long k = 1; k < kmax; ++k) {
        Poly<F> next = Poly<F>::x() * seq.rows[static_cast<size_t>(k)] -
                       beta[static_cast<size_t>(k)] * seq.rows[static_cast<size_t>(k)] -
                       alpha[static_cast<size_t>(k - 1)] * seq.rows[static_cast<size_t>(k - 1)];
        seq.rows.push_back(std::move(next));
    }
    return seq;
}

template <Field F>
MonicPolySeq<F> recurrence_polys(const RecurrenceTable<F>& tab, long kmax) {
    return recurrence_polys(tab.alpha, tab.beta, kmax);
}

// Moments of the orthogonality functional normalized to m_0 = 1, realized as
// (L^n)_{0,0}; independent of the truncation once it exceeds n.
template <Field F>
std::vector<F> moments(const BandedMatrix<F>& L, long nmax) {
    long step = std::max(0L, static_cast<long>(-L.band_lo()));
    if (L.size() <= nmax * step || L.size() <= nmax)
        throw TruncationError("moments to order " + std::to_string(nmax) +
                              " need L of size > nmax");
    std::vector<F> w(static_cast<size_t>(L.size()), F(0));
    w[0] = F(1);
    std::vector<F> ms;
    ms.reserve(static_cast<size_t>(nmax) + 1);
    ms.push_back(F(1));
    std::vector<F> next(w.size(), F(0));
    for (long n = 1; n <= nmax; ++n) {
        for (long j = 0; j < L.size(); ++j) {
            F acc(0);
            for (long k = std::max(0L, j - L.band_hi()); k <= std::min(L.size() - 1, j - static_cast<long>(L.band_lo())); ++k)
                acc = acc + L.get(j, k) * w[static_cast<size_t>(k)];
            next[static_cast<size_t>(j)] = std::move(acc);
        }
        std::swap(w, next);
        ms.push_back(w[0]);
    }
    return ms;
}

struct GramViolation {
    long j, k;
    std::string expected, actual;
};

template <Field F>
struct GramReport {
    bool ok = true;
    std::optional<GramViolation> violation;
    std::vector<F> diagonal;  // mu(p_k^2) for k = 0..kmax
};

// mu(p_j p_k) expanded against an explicit moment sequence: off-diagonal
// entries must vanish and the diagonal must equal gamma_k = alpha_1...alpha_k.
template <Field F>
GramReport<F> gram_of(const std::vector<F>& ms, const MonicPolySeq<F>& seq,
                      const std::vector<F>& alpha, long kmax) {
    if (static_cast<long>(ms.size()) < 2 * kmax + 1)
        throw TruncationError("gram to kmax needs moments to order 2*kmax");
    auto mu_of = [&](const Poly<F>& p) {
        F acc(0);
        for (int i = 0; i <= p.degree(); ++i) acc = acc + p.coeff(i) * ms[static_cast<size_t>(i)];
        return acc;
    };
    GramReport<F> rep;
    F gamma(1);
    for (long j = 0; j <= kmax; ++j) {
        for (long k = 0; k <= j; ++k) {
            F val = mu_of(seq.rows[static_cast<size_t>(j)] * seq.rows[static_cast<size_t>(k)]);
            if (j == k) {
                rep.diagonal.push_back(val);
                if (val != gamma) {
                    rep.ok = false;
                    if (!rep.violation)
                        rep.violation = GramViolation{j, k, gamma.str(), val.str()};
                }
                if (j < kmax) gamma = gamma * alpha[static_cast<size_t>(j)];
            } else if (!val.is_zero()) {
                rep.ok = false;
                if (!rep.violation) rep.violation = GramViolation{j, k, "0", val.str()};
            }
        }
    }
    return rep;
}

template <Field F>
GramReport<F> gram_check(const RecurrenceTable<F>& tab, long kmax) {
    long need = 2 * kmax + 1;  // truncation of L so that (L^n)_{0,0} is exact to n = 2 kmax
    if (tab.kmax + 1 < need)
        throw TruncationError("gram_check to kmax=" + std::to_string(kmax) +
                              " needs a table of kmax >= " + std::to_string(need - 1));
    auto seq = recurrence_polys(tab, kmax);
    auto L = tridiagonal_L(tab, need);
    auto ms = moments(L, 2 * kmax);
    return gram_of(ms, seq, tab.alpha, kmax);
}

struct HahnReport {
    bool residual_zero = false;
    bool t_is_zero = false;
    std::optional<std::tuple<long, long, std::string>> first_nonzero;
};

// A~ = D^_q A D_q is always monic lower triangular; it is again a matrix of
// orthogonal polynomials with recurrence matrix M exactly in the classical
// (t = 0) case, which M A~ - A~ X = 0 detects.
template <Field F>
HahnReport hahn_transform_check(const RecurrenceTable<F>& tab, const F& q, long n) {
    long big = n + 6;
    if (tab.kmax < big + 1)
        throw TruncationError("hahn_transform_check at order " + std::to_string(n) +
                              " needs a table of kmax >= N + 7");
    auto A = recurrence_polys(tab, big).matrix();
    auto Dq = build_operator<F>(OperatorKind::Dq, q, big + 1);
    auto DqHat = build_operator<F>(OperatorKind::DqHat, q, big + 1);
    auto X = build_operator<F>(OperatorKind::X, q, big + 1);
    auto At = DqHat * A * Dq;
    auto M = tridiagonal_M(tab, big);
    auto R = M * At - At * X;
    HahnReport rep;
    rep.t_is_zero = tab.t.is_zero();
    auto nz = R.first_nonzero_on(n);
    rep.residual_zero = !nz.has_value();
    if (nz)
        rep.first_nonzero = std::make_tuple(std::get<0>(*nz), std::get<1>(*nz),
                                            std::get<2>(*nz).str());
    return rep;
}

}  // namespace qhahn

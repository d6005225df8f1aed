#pragma once

// Characteristic polynomials of upper Hessenberg matrices.
//
// Two independent recurrence implementations are kept deliberately:
// charpoly_hessenberg works at the polynomial level, and
// charpoly_hessenberg_coeffwise rebuilds the coefficient table entry by
// entry.  charpoly_toeplitz is a third, Toeplitz-specialised coefficient
// recurrence.  det_bareiss / charpoly_bareiss form a fraction-free
// elimination route that shares no code with any of the recurrences and
// serves as their cross-check.

#include "bohemian/matrix.hpp"
#include "bohemian/poly.hpp"
#include "bohemian/population.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bohemian {

namespace detail {

// prefix[i] = quarter turns of s_1 * ... * s_i
inline std::vector<int> angle_prefix(const std::vector<SubdiagAngle>& sub) {
    std::vector<int> pre(sub.size() + 1, 0);
    for (std::size_t i = 0; i < sub.size(); ++i) pre[i + 1] = (pre[i] + sub[i].quarter_turns) & 3;
    return pre;
}

}  // namespace detail

// det(zI - H) by the polynomial-level recurrence
//   Q_m = z Q_{m-1} - sum_{k=1..m} (s_{m-k+1} ... s_{m-1}) h_{m-k+1,m} Q_{m-k}.
template <class Scalar>
Polynomial<Scalar> charpoly_hessenberg(const UpperHessenberg<Scalar>& h) {
    const int n = h.n;
    const auto pre = detail::angle_prefix(h.subdiag);
    std::vector<Polynomial<Scalar>> q(static_cast<std::size_t>(n) + 1);
    q[0] = Polynomial<Scalar>::one();
    for (int m = 1; m <= n; ++m) {
        Polynomial<Scalar> acc = poly_shift(q[static_cast<std::size_t>(m - 1)], 1);
        for (int k = 1; k <= m; ++k) {
            // subdiagonal product over positions m-k+1 .. m-1
            int turns = (pre[static_cast<std::size_t>(m - 1)] - pre[static_cast<std::size_t>(m - k)] + 4) & 3;
            Scalar w = apply_quarter_turns(h.entry(m - k, m - 1), turns);
            if (is_zero(w)) continue;
            const auto& prev = q[static_cast<std::size_t>(m - k)];
            for (std::size_t j = 0; j < prev.coeff.size(); ++j) acc.coeff[j] -= w * prev.coeff[j];
        }
        q[static_cast<std::size_t>(m)] = std::move(acc);
    }
    return q[static_cast<std::size_t>(n)];
}

// Same polynomial, built coefficient by coefficient:
//   q_{m,m} = 1,
//   q_{m,j} = q_{m-1,j-1} - sum_{k=1..m-j} w(m,k) q_{m-k,j}   (1 <= j <= m-1),
//   q_{m,0} = -sum_{k=1..m} w(m,k) q_{m-k,0},
// with w(m,k) the rotated column entry used above.
template <class Scalar>
Polynomial<Scalar> charpoly_hessenberg_coeffwise(const UpperHessenberg<Scalar>& h) {
    const int n = h.n;
    const auto pre = detail::angle_prefix(h.subdiag);
    std::vector<std::vector<Scalar>> q(static_cast<std::size_t>(n) + 1);
    q[0] = {Scalar(1)};
    for (int m = 1; m <= n; ++m) {
        std::vector<Scalar> row(static_cast<std::size_t>(m) + 1, Scalar(0));
        row[static_cast<std::size_t>(m)] = Scalar(1);
        auto w_of = [&](int k) {
            int turns = (pre[static_cast<std::size_t>(m - 1)] - pre[static_cast<std::size_t>(m - k)] + 4) & 3;
            return apply_quarter_turns(h.entry(m - k, m - 1), turns);
        };
        for (int j = 1; j <= m - 1; ++j) {
            Scalar acc = q[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(j - 1)];
            for (int k = 1; k <= m - j; ++k)
                acc -= w_of(k) * q[static_cast<std::size_t>(m - k)][static_cast<std::size_t>(j)];
            row[static_cast<std::size_t>(j)] = acc;
        }
        Scalar c0(0);
        for (int k = 1; k <= m; ++k) c0 -= w_of(k) * q[static_cast<std::size_t>(m - k)][0];
        row[0] = c0;
        q[static_cast<std::size_t>(m)] = std::move(row);
    }
    return Polynomial<Scalar>(std::move(q[static_cast<std::size_t>(n)]));
}

// Toeplitz specialisation: the column entry on diagonal k-1 is t_k and the
// subdiagonal product collapses to s^{k-1}.
template <class Scalar>
Polynomial<Scalar> charpoly_toeplitz(const UHToeplitz<Scalar>& m) {
    const int n = m.n;
    const int s_turns = m.subdiag.quarter_turns;
    std::vector<Scalar> t(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k)
        t[static_cast<std::size_t>(k - 1)] =
            apply_quarter_turns(m.first_row[static_cast<std::size_t>(k - 1)], (s_turns * (k - 1)) & 3);
    std::vector<std::vector<Scalar>> p(static_cast<std::size_t>(n) + 1);
    p[0] = {Scalar(1)};
    for (int d = 1; d <= n; ++d) {
        std::vector<Scalar> row(static_cast<std::size_t>(d) + 1, Scalar(0));
        row[static_cast<std::size_t>(d)] = Scalar(1);
        for (int j = 1; j <= d - 1; ++j) {
            Scalar acc = p[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(j - 1)];
            for (int k = 1; k <= d - j; ++k)
                acc -= t[static_cast<std::size_t>(k - 1)] * p[static_cast<std::size_t>(d - k)][static_cast<std::size_t>(j)];
            row[static_cast<std::size_t>(j)] = acc;
        }
        Scalar c0(0);
        for (int k = 1; k <= d; ++k) c0 -= t[static_cast<std::size_t>(k - 1)] * p[static_cast<std::size_t>(d - k)][0];
        row[0] = c0;
        p[static_cast<std::size_t>(d)] = std::move(row);
    }
    return Polynomial<Scalar>(std::move(p[static_cast<std::size_t>(n)]));
}

// ---------------------------------------------------------------------------
// Fraction-free (Bareiss) elimination over any integral domain.  Works on a
// flat row-major buffer; row pivoting only.  A pivot column with no nonzero
// entry is a zero column of the reduced block, so the determinant is zero
// (cofactor expansion along that column).

template <class Ring>
Ring det_bareiss_inplace(std::vector<Ring>& a, int n) {
    bool negate = false;
    Ring prev(1);
    auto at = [&](int i, int j) -> Ring& { return a[static_cast<std::size_t>(i) * n + j]; };
    for (int k = 0; k + 1 < n; ++k) {
        if (is_zero(at(k, k))) {
            int r = k + 1;
            while (r < n && is_zero(at(r, k))) ++r;
            if (r == n) return Ring(0);
            for (int j = k; j < n; ++j) std::swap(at(k, j), at(r, j));
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                at(i, j) = exact_div(Ring(at(k, k) * at(i, j) - at(i, k) * at(k, j)), prev);
            at(i, k) = Ring(0);
        }
        prev = at(k, k);
    }
    Ring det = at(n - 1, n - 1);
    return negate ? Ring(-det) : det;
}

template <class Scalar>
Scalar det_bareiss(const DenseMatrix<Scalar>& m) {
    if (m.rows() != m.cols() || m.rows() < 1) throw std::invalid_argument("determinant of a non-square matrix");
    const int n = static_cast<int>(m.rows());
    std::vector<Scalar> buf(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) buf[static_cast<std::size_t>(i) * n + j] = m(i, j);
    return det_bareiss_inplace(buf, n);
}

// det(zI - A) by Bareiss over the polynomial ring; independent of every
// recurrence above.
template <class Scalar>
Polynomial<Scalar> charpoly_bareiss(const DenseMatrix<Scalar>& m) {
    if (m.rows() != m.cols() || m.rows() < 1) throw std::invalid_argument("charpoly of a non-square matrix");
    const int n = static_cast<int>(m.rows());
    std::vector<Polynomial<Scalar>> buf(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Polynomial<Scalar> e;
            if (i == j)
                e.coeff = {Scalar(-m(i, j)), Scalar(1)};
            else
                e.coeff = {Scalar(-m(i, j))};
            buf[static_cast<std::size_t>(i) * n + j] = std::move(e);
        }
    Polynomial<Scalar> det = det_bareiss_inplace(buf, n);
    det.coeff.resize(static_cast<std::size_t>(n) + 1, Scalar(0));  // pad in case of cancellation
    return det;
}

// ---------------------------------------------------------------------------

// Characteristic polynomials of M and -M.  Callers check height equality and
// the coefficient relation p'_j = (-1)^(n-j) p_j.
template <class Scalar>
std::pair<Polynomial<Scalar>, Polynomial<Scalar>> charpoly_negation_pair(const UpperHessenberg<Scalar>& h) {
    UpperHessenberg<Scalar> neg = h;
    for (auto& e : neg.upper) e = -e;
    for (auto& s : neg.subdiag) s = s.negated();
    return {charpoly_hessenberg(h), charpoly_hessenberg(neg)};
}

template <class Scalar>
std::pair<Polynomial<Scalar>, Polynomial<Scalar>> charpoly_negation_pair(const UHToeplitz<Scalar>& m) {
    UHToeplitz<Scalar> neg = m;
    for (auto& e : neg.first_row) e = -e;
    neg.subdiag = neg.subdiag.negated();
    return {charpoly_toeplitz(m), charpoly_toeplitz(neg)};
}

// Diagonal-unitary similarity sending every subdiagonal entry to +1
// (target angle 0) or -1 (target angle 2).  With d_1 = 1 and
// d_{k+1} = sigma * d_k * conj(s_k) the transformed entries are
// h'_{ij} = d_i h_{ij} conj(d_j); the population must be closed under the
// unit factors that appear, which is implied by closure under each s_k and
// -s_k.  The characteristic polynomial is unchanged.
template <class Scalar>
UpperHessenberg<Scalar> reduce_subdiagonal(const UpperHessenberg<Scalar>& h, SubdiagAngle target,
                                           const Population& pop) {
    if (target.quarter_turns != 0 && target.quarter_turns != 2)
        throw std::invalid_argument("subdiagonal target must be +1 or -1");
    for (const auto& s : h.subdiag) {
        for (const auto& p : pop.elements) {
            if (!pop.contains(apply_quarter_turns(p, s.quarter_turns)))
                throw std::domain_error("population is not invariant under subdiagonal unit i^" +
                                        std::to_string(int(s.quarter_turns)) + ": element " + to_entry_string(p) +
                                        " leaves the population");
            if (!pop.contains(apply_quarter_turns(p, s.negated().quarter_turns)))
                throw std::domain_error("population is not invariant under negated subdiagonal unit -i^" +
                                        std::to_string(int(s.quarter_turns)) + ": element " + to_entry_string(p) +
                                        " leaves the population");
        }
    }
    const int n = h.n;
    std::vector<int> d(static_cast<std::size_t>(n), 0);  // quarter turns of the conjugating diagonal
    for (int k = 0; k + 1 < n; ++k)
        d[static_cast<std::size_t>(k + 1)] =
            (target.quarter_turns + d[static_cast<std::size_t>(k)] +
             h.subdiag[static_cast<std::size_t>(k)].conjugated().quarter_turns) &
            3;
    UpperHessenberg<Scalar> out = UpperHessenberg<Scalar>::zero(n, target);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            int turns = (d[static_cast<std::size_t>(i)] - d[static_cast<std::size_t>(j)] + 8) & 3;
            out.entry(i, j) = apply_quarter_turns(h.entry(i, j), turns);
        }
    return out;
}

// Non-derogatory certificate: the Krylov matrix [e1, M e1, ..., M^{n-1} e1]
// is nonsingular iff e1 is a cyclic vector.
template <class Scalar>
bool is_nonderogatory(const UpperHessenberg<Scalar>& h) {
    const int n = h.n;
    DenseMatrix<Scalar> m = h.expand();
    std::vector<Scalar> krylov(static_cast<std::size_t>(n) * n, Scalar(0));
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> v(n);
    for (int i = 0; i < n; ++i) v(i) = Scalar(i == 0 ? 1 : 0);
    for (int c = 0; c < n; ++c) {
        for (int i = 0; i < n; ++i) krylov[static_cast<std::size_t>(i) * n + c] = v(i);
        if (c + 1 < n) v = (m * v).eval();
    }
    return !is_zero(det_bareiss_inplace(krylov, n));
}

// ---------------------------------------------------------------------------

struct CharpolyResult {
    Poly poly;
    HeightInfo height;
    int mu = 0;  // largest power whose coefficient attains the height
};

inline CharpolyResult make_charpoly_result(Poly p) {
    CharpolyResult r;
    r.height = poly_height(p);
    r.poly = std::move(p);
    r.mu = r.height.attaining.back();
    return r;
}

inline CharpolyResult charpoly_result(const UHMatrix& m) { return make_charpoly_result(charpoly_hessenberg(m)); }
inline CharpolyResult charpoly_result(const UHTMatrix& m) { return make_charpoly_result(charpoly_toeplitz(m)); }
inline CharpolyResult charpoly_result(const GMatrix& m) { return make_charpoly_result(charpoly_bareiss(m)); }

}  // namespace bohemian

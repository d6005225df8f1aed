#pragma once

// Exact matrix classifiers used by the enumeration drivers.

#include "bohemian/charpoly.hpp"
#include "bohemian/matrix.hpp"

#include <stdexcept>
#include <vector>

namespace bohemian {

template <class Scalar>
bool is_singular(const DenseMatrix<Scalar>& m) {
    return is_zero(det_bareiss(m));
}

template <class Scalar>
bool is_normal(const DenseMatrix<Scalar>& m) {
    DenseMatrix<Scalar> mh = conj_transpose(m);
    DenseMatrix<Scalar> left = m * mh;
    DenseMatrix<Scalar> right = mh * m;
    return exact_equal(left, right);
}

// A is nilpotent iff A^n = 0; repeated squaring reaches a power >= n in
// ceil(log2 n) multiplications.
template <class Scalar>
bool is_nilpotent(const DenseMatrix<Scalar>& m) {
    const Eigen::Index n = m.rows();
    DenseMatrix<Scalar> b = m;
    Eigen::Index pow = 1;
    while (true) {
        if (is_zero_matrix(b)) return true;
        if (pow >= n) return false;
        b = (b * b).eval();
        pow *= 2;
    }
}

// ---------------------------------------------------------------------------
// Strict Hurwitz test by exact Routh tabulation over the rationals.
// Coefficients ascending, real integers, monic of degree >= 1.  Any zero or
// negative first-column entry (including degenerate zero pivots) means the
// polynomial is not strictly stable; no epsilon perturbation is applied.

inline bool routh_strictly_stable(const std::vector<mpz_class>& ascending) {
    const int n = static_cast<int>(ascending.size()) - 1;
    if (n < 1) throw std::invalid_argument("stability test needs degree >= 1");
    auto a = [&](int k) { return mpq_class(ascending[static_cast<std::size_t>(n - k)]); };  // descending view
    std::vector<std::vector<mpq_class>> rows(2);
    for (int k = 0; k <= n; k += 2) rows[0].push_back(a(k));
    for (int k = 1; k <= n; k += 2) rows[1].push_back(a(k));
    if (rows[0][0] <= 0) return false;
    for (int i = 2; i <= n; ++i) {
        const auto& p2 = rows[static_cast<std::size_t>(i - 2)];
        const auto& p1 = rows[static_cast<std::size_t>(i - 1)];
        if (p1[0] == 0) return false;
        std::size_t len = p2.size() > 1 ? p2.size() - 1 : 1;
        std::vector<mpq_class> row(len, 0);
        auto get = [](const std::vector<mpq_class>& v, std::size_t j) {
            return j < v.size() ? v[j] : mpq_class(0);
        };
        for (std::size_t j = 0; j < len; ++j)
            row[j] = (p1[0] * get(p2, j + 1) - p2[0] * get(p1, j + 1)) / p1[0];
        if (row[0] <= 0) return false;
        rows.push_back(std::move(row));
    }
    for (const auto& r : rows)
        if (r[0] <= 0) return false;
    return true;
}

// extracts real integer coefficients; complex entries are rejected
template <class Scalar>
std::vector<mpz_class> real_coefficients(const Polynomial<Scalar>& p) {
    std::vector<mpz_class> out;
    out.reserve(p.coeff.size());
    for (const auto& c : p.coeff) {
        GaussInt g = gauss_promote(c);
        if (g.im != 0)
            throw std::domain_error("stability test requires real entries; got coefficient " + to_entry_string(g));
        out.push_back(g.re);
    }
    return out;
}

// All eigenvalues strictly in the left half plane.
template <class Scalar>
bool is_type1_stable(const DenseMatrix<Scalar>& m) {
    return routh_strictly_stable(real_coefficients(charpoly_bareiss(m)));
}

// All eigenvalues strictly inside the unit circle.  For exact integer (or
// Gaussian integer) entries: factor z^m out of the characteristic
// polynomial; any remaining nonzero constant coefficient has magnitude >= 1
// and forces a root on or outside the circle, so stability holds iff the
// whole polynomial is z^n.  Deliberately independent of the matrix-power
// path in is_nilpotent.
template <class Scalar>
bool is_type2_stable_charpoly(const Polynomial<Scalar>& charpoly) {
    std::size_t m = 0;
    while (m < charpoly.coeff.size() && is_zero(charpoly.coeff[m])) ++m;
    return m + 1 == charpoly.coeff.size();  // remaining factor has degree 0
}

template <class Scalar>
bool is_type2_stable(const DenseMatrix<Scalar>& m) {
    return is_type2_stable_charpoly(charpoly_bareiss(m));
}

}  // namespace bohemian

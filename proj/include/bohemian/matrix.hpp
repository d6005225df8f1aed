#pragma once

// Dense and structured matrix types.  Upper Hessenberg matrices store the
// upper triangle row-major plus unit subdiagonal angles; everything below
// the subdiagonal is implicitly zero and subdiagonal entries are never zero.

#include "bohemian/gaussint.hpp"
#include "bohemian/poly.hpp"

#include <Eigen/Dense>

#include <stdexcept>
#include <vector>

namespace bohemian {

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using GMatrix = DenseMatrix<GaussInt>;

// row-major offset of (i, j), 0-based, i <= j
inline std::size_t upper_index(int i, int j, int n) {
    return static_cast<std::size_t>(i) * n - static_cast<std::size_t>(i) * (i - 1) / 2 +
           static_cast<std::size_t>(j - i);
}

template <class Scalar>
struct UpperHessenberg {
    int n = 0;
    std::vector<Scalar> upper;            // h_{i,j} for i <= j, row-major, n(n+1)/2 entries
    std::vector<SubdiagAngle> subdiag;    // n-1 unit angles

    UpperHessenberg() = default;
    UpperHessenberg(int dim, std::vector<Scalar> up, std::vector<SubdiagAngle> sub)
        : n(dim), upper(std::move(up)), subdiag(std::move(sub)) {
        if (n < 1) throw std::invalid_argument("matrix dimension must be >= 1");
        if (upper.size() != static_cast<std::size_t>(n) * (n + 1) / 2)
            throw std::invalid_argument("upper triangle storage has wrong length");
        if (subdiag.size() != static_cast<std::size_t>(n - 1))
            throw std::invalid_argument("subdiagonal storage has wrong length");
    }

    static UpperHessenberg zero(int dim, SubdiagAngle angle = SubdiagAngle(0)) {
        return UpperHessenberg(dim, std::vector<Scalar>(static_cast<std::size_t>(dim) * (dim + 1) / 2, Scalar(0)),
                               std::vector<SubdiagAngle>(static_cast<std::size_t>(dim - 1), angle));
    }

    const Scalar& entry(int i, int j) const { return upper[upper_index(i, j, n)]; }
    Scalar& entry(int i, int j) { return upper[upper_index(i, j, n)]; }

    DenseMatrix<Scalar> expand() const {
        DenseMatrix<Scalar> m = DenseMatrix<Scalar>::Zero(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) m(i, j) = entry(i, j);
        for (int k = 0; k + 1 < n; ++k) m(k + 1, k) = subdiag[static_cast<std::size_t>(k)].template unit<Scalar>();
        return m;
    }
};

template <class Scalar>
struct UHToeplitz {
    int n = 0;
    std::vector<Scalar> first_row;  // t_1..t_n; diagonal k-1 is constantly t_k
    SubdiagAngle subdiag;           // one unit angle shared by the whole subdiagonal

    UHToeplitz() = default;
    UHToeplitz(int dim, std::vector<Scalar> row, SubdiagAngle angle = SubdiagAngle(0))
        : n(dim), first_row(std::move(row)), subdiag(angle) {
        if (n < 1) throw std::invalid_argument("matrix dimension must be >= 1");
        if (first_row.size() != static_cast<std::size_t>(n))
            throw std::invalid_argument("Toeplitz first row has wrong length");
    }

    UpperHessenberg<Scalar> expand_hessenberg() const {
        UpperHessenberg<Scalar> h = UpperHessenberg<Scalar>::zero(n, subdiag);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) h.entry(i, j) = first_row[static_cast<std::size_t>(j - i)];
        return h;
    }

    DenseMatrix<Scalar> expand() const { return expand_hessenberg().expand(); }
};

using UHMatrix = UpperHessenberg<GaussInt>;
using UHTMatrix = UHToeplitz<GaussInt>;

// ---------------------------------------------------------------------------

template <class Scalar>
bool exact_equal(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (!(a(i, j) == b(i, j))) return false;
    return true;
}

template <class Scalar>
bool is_zero_matrix(const DenseMatrix<Scalar>& a) {
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (!is_zero(a(i, j))) return false;
    return true;
}

template <class Scalar>
DenseMatrix<Scalar> conj_transpose(const DenseMatrix<Scalar>& a) {
    DenseMatrix<Scalar> r(a.cols(), a.rows());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) r(j, i) = conj_of(a(i, j));
    return r;
}

inline Magnitude matrix_height(const GMatrix& m) {
    mpz_class best = 0;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) best = std::max(best, sqmag(m(i, j)));
    return magnitude_from_sq(best);
}

inline Magnitude matrix_height(const UHMatrix& m) { return matrix_height(m.expand()); }
inline Magnitude matrix_height(const UHTMatrix& m) { return matrix_height(m.expand()); }

// ---------------------------------------------------------------------------
// The two zero-diagonal normal patterns: unit w on the superdiagonal
// (w-skew symmetric) or in the top-right corner (w-skew circulant), with
// unit subdiagonal and zeros elsewhere.

inline UHMatrix skew_symmetric_normal(int n, const GaussInt& w) {
    UHMatrix m = UHMatrix::zero(n);
    for (int i = 0; i + 1 < n; ++i) m.entry(i, i + 1) = w;
    return m;
}

inline UHMatrix skew_circulant_normal(int n, const GaussInt& w) {
    UHMatrix m = UHMatrix::zero(n);
    if (n > 1) m.entry(0, n - 1) = w;
    return m;
}

}  // namespace bohemian

#pragma once

// Matrix family descriptions and the index <-> matrix bijection driving
// exhaustive and sampled enumeration.
//
// Index contract (stable across versions, used for resumable runs): a
// family member is the mixed-radix expansion of its index in base #P, least
// significant digit first, over the family's free positions enumerated as
//   full:            (row 0, col 0), (0,1), ..., row-major over all n^2
//   upper_hessenberg: row-major over the upper triangle (i <= j)
//   uh_toeplitz:     t_1, t_2, ..., t_n
// with diagonal positions removed when zero_diagonal is set.  Digit d maps
// to population element d in declaration order.

#include "bohemian/gaussint.hpp"
#include "bohemian/matrix.hpp"
#include "bohemian/population.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bohemian {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Shape { full, upper_hessenberg, uh_toeplitz };

inline std::string shape_name(Shape s) {
    switch (s) {
        case Shape::full: return "full";
        case Shape::upper_hessenberg: return "uh";
        default: return "uht";
    }
}

struct FamilySpec {
    Shape shape = Shape::upper_hessenberg;
    int n = 1;
    Population population;
    std::vector<SubdiagAngle> subdiag;  // empty = all zero quarter turns; length 1 = uniform; else n-1 angles
    bool zero_diagonal = false;

    void validate() const {
        if (n < 1) throw std::invalid_argument("family dimension must be >= 1");
        if (population.elements.empty()) throw std::invalid_argument("family population is empty");
        if (zero_diagonal && !population.contains(GaussInt(0)))
            throw std::invalid_argument("zero-diagonal family requires 0 in the population");
        if (!subdiag.empty() && subdiag.size() != 1 && subdiag.size() != static_cast<std::size_t>(n - 1))
            throw std::invalid_argument("subdiagonal angle list must have length 1 or n-1");
        if (shape == Shape::uh_toeplitz && subdiag.size() > 1)
            throw std::invalid_argument("Toeplitz families take a single subdiagonal angle");
        if (shape == Shape::full && !subdiag.empty())
            throw std::invalid_argument("full families have no subdiagonal structure");
    }

    SubdiagAngle angle_at(int k) const {  // k = 0..n-2
        if (subdiag.empty()) return SubdiagAngle(0);
        if (subdiag.size() == 1) return subdiag[0];
        return subdiag[static_cast<std::size_t>(k)];
    }

    bool real_valued() const {
        if (!population.all_real()) return false;
        if (shape == Shape::full) return true;
        for (int k = 0; k + 1 < n; ++k)
            if (!angle_at(k).is_real()) return false;
        return true;
    }

    int free_positions() const {
        switch (shape) {
            case Shape::full: return n * n - (zero_diagonal ? n : 0);
            case Shape::upper_hessenberg: return n * (n + 1) / 2 - (zero_diagonal ? n : 0);
            default: return n - (zero_diagonal ? 1 : 0);
        }
    }

    mpz_class cardinality() const {
        mpz_class c;
        mpz_ui_pow_ui(c.get_mpz_t(), population.size(), static_cast<unsigned long>(free_positions()));
        return c;
    }

    // (row, col) of each free position, in index order
    std::vector<std::pair<int, int>> free_coordinates() const {
        std::vector<std::pair<int, int>> pos;
        switch (shape) {
            case Shape::full:
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        if (!(zero_diagonal && i == j)) pos.emplace_back(i, j);
                break;
            case Shape::upper_hessenberg:
                for (int i = 0; i < n; ++i)
                    for (int j = i; j < n; ++j)
                        if (!(zero_diagonal && i == j)) pos.emplace_back(i, j);
                break;
            default:
                for (int k = zero_diagonal ? 1 : 0; k < n; ++k) pos.emplace_back(0, k);  // t_{k+1}
                break;
        }
        return pos;
    }
};

// ---------------------------------------------------------------------------
// int64 safety estimates.  All bounds are computed in log2 and compared
// against a 60-bit ceiling, so the fast backend is only chosen when every
// intermediate of the requested computation provably fits.

namespace bounds {

constexpr double kSafeBits = 60.0;

// |k-minor| <= (k * maxsq)^(k/2) (Hadamard); Bareiss forms products of two
// consecutive minors.
inline bool det_fits_int64(int n, double max_sqmag) {
    double b = 0.5 * n * std::log2(std::max(2.0, n * max_sqmag));
    return 2.0 * b + 2.0 < kSafeBits;
}

// coefficients of minors of zI - A: <= 2^k * (k*(maxsq+1))^(k/2); Bareiss
// over the polynomial ring multiplies two of those and sums <= n+1 terms.
inline bool charpoly_bareiss_fits_int64(int n, double max_sqmag) {
    double b = n + 0.5 * n * std::log2(std::max(2.0, n * (max_sqmag + 1.0)));
    return 2.0 * b + std::log2(n + 1.0) + 2.0 < kSafeBits;
}

// recurrence coefficients are dominated by the all-(-|t|) pattern; run that
// dominating recurrence in doubles
inline bool charpoly_recurrence_fits_int64(int n, double max_sqmag) {
    const double h = std::sqrt(max_sqmag);
    std::vector<std::vector<double>> b(static_cast<std::size_t>(n) + 1);
    b[0] = {1.0};
    for (int m = 1; m <= n; ++m) {
        std::vector<double> row(static_cast<std::size_t>(m) + 1, 0.0);
        row[static_cast<std::size_t>(m)] = 1.0;
        for (int j = 0; j <= m - 1; ++j) {
            double acc = j > 0 ? b[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(j - 1)] : 0.0;
            for (int k = 1; k <= m - j; ++k) acc += h * b[static_cast<std::size_t>(m - k)][static_cast<std::size_t>(j)];
            if (acc > std::ldexp(1.0, 60)) return false;
            row[static_cast<std::size_t>(j)] = acc;
        }
        b[static_cast<std::size_t>(m)] = std::move(row);
    }
    return true;
}

// Krylov columns: entry bound e_k = n * e_{k-1} * h; column norms sqrt(n)*e_k
inline bool krylov_fits_int64(int n, double max_sqmag) {
    const double h = std::sqrt(max_sqmag);
    double log_e = 0.0, log_det = 0.0;
    for (int k = 1; k < n; ++k) {
        log_e += std::log2(double(n)) + std::log2(std::max(1.0, h));
        log_det += 0.5 * std::log2(double(n)) + log_e;
    }
    return 2.0 * log_det + 2.0 < kSafeBits;
}

// repeated squaring up to A^(2^ceil(log2 n))
inline bool power_fits_int64(int n, double max_sqmag) {
    double log_e = 0.5 * std::log2(std::max(1.0, max_sqmag));
    for (int pow = 1; pow < n; pow *= 2) {
        log_e = std::log2(double(n)) + 2.0 * log_e;
        if (2.0 * log_e + 2.0 >= kSafeBits) return false;
    }
    return true;
}

}  // namespace bounds

// ---------------------------------------------------------------------------
// Decoding an index into concrete storage.  MemberState keeps a dense matrix
// (always) plus the structured views a shape provides, and supports both
// random access (decode) and sequential odometer stepping that touches only
// the digits that change.

template <class Scalar>
struct MemberState {
    const FamilySpec* spec = nullptr;
    std::vector<Scalar> palette;              // population in backend scalars
    std::vector<std::pair<int, int>> coords;  // free position -> (row, col)
    std::vector<std::uint8_t> digits;
    DenseMatrix<Scalar> dense;
    UHToeplitz<Scalar> toeplitz;   // maintained for uh_toeplitz only
    UpperHessenberg<Scalar> hess;  // maintained for upper_hessenberg only

    explicit MemberState(const FamilySpec& fam) : spec(&fam) {
        fam.validate();
        for (const auto& e : fam.population.elements) palette.push_back(scalar_from_gauss<Scalar>(e));
        coords = fam.free_coordinates();
        digits.assign(coords.size(), 0);
        dense = DenseMatrix<Scalar>::Zero(fam.n, fam.n);
        for (int k = 0; k + 1 < fam.n; ++k) dense(k + 1, k) = fam.angle_at(k).template unit<Scalar>();
        if (fam.shape == Shape::uh_toeplitz)
            toeplitz = UHToeplitz<Scalar>(fam.n, std::vector<Scalar>(static_cast<std::size_t>(fam.n), Scalar(0)),
                                          fam.angle_at(0));
        if (fam.shape == Shape::upper_hessenberg) {
            hess = UpperHessenberg<Scalar>::zero(fam.n);
            for (int k = 0; k + 1 < fam.n; ++k) hess.subdiag[static_cast<std::size_t>(k)] = fam.angle_at(k);
        }
        for (std::size_t p = 0; p < coords.size(); ++p) apply(p, 0);
    }

    void apply(std::size_t pos, std::uint8_t digit) {
        digits[pos] = digit;
        const Scalar& v = palette[digit];
        auto [i, j] = coords[pos];
        switch (spec->shape) {
            case Shape::uh_toeplitz:
                toeplitz.first_row[static_cast<std::size_t>(j)] = v;
                for (int r = 0; r + j < spec->n; ++r) dense(r, r + j) = v;
                break;
            case Shape::upper_hessenberg:
                hess.entry(i, j) = v;
                dense(i, j) = v;
                break;
            default:
                dense(i, j) = v;
                break;
        }
    }

    void decode(std::uint64_t index) {
        const std::uint64_t base = palette.size();
        for (std::size_t p = 0; p < digits.size(); ++p) {
            apply(p, static_cast<std::uint8_t>(index % base));
            index /= base;
        }
    }

    // advance to the next index; returns false on wrap-around
    bool step() {
        const std::uint8_t top = static_cast<std::uint8_t>(palette.size() - 1);
        for (std::size_t p = 0; p < digits.size(); ++p) {
            if (digits[p] < top) {
                apply(p, digits[p] + 1);
                return true;
            }
            apply(p, 0);
        }
        return false;
    }

};

}  // namespace bohemian

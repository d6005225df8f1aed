#pragma once

// Exact Gaussian-integer scalar a + bi, templated on the integer backend.
// The canonical backend is mpz_class (unbounded); std::int64_t is used by
// enumeration kernels when the working values are provably small.

#include <Eigen/Core>
#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace bohemian {

// ---------------------------------------------------------------------------
// integer backend helpers

inline std::string int_to_string(const mpz_class& v) { return v.get_str(); }
inline std::string int_to_string(std::int64_t v) { return std::to_string(v); }

inline bool fits_int64(const mpz_class& v) { return v.fits_slong_p(); }

inline std::int64_t to_int64(const mpz_class& v) {
    if (!v.fits_slong_p()) throw std::domain_error("value does not fit in 64 bits: " + v.get_str());
    return static_cast<std::int64_t>(v.get_si());
}

inline mpz_class exact_div_int(const mpz_class& num, const mpz_class& den) {
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw std::domain_error("inexact integer division");
    return q;
}

inline std::int64_t exact_div_int(std::int64_t num, std::int64_t den) {
    if (num % den != 0) throw std::domain_error("inexact integer division");
    return num / den;
}

// ---------------------------------------------------------------------------

template <class Int>
struct GaussianInt {
    Int re{};
    Int im{};

    GaussianInt() = default;
    GaussianInt(int r) : re(r) {}        // NOLINT: implicit by design, ring literal
    GaussianInt(long r) : re(r) {}       // NOLINT
    GaussianInt(Int r) : re(std::move(r)) {}
    GaussianInt(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}

    friend GaussianInt operator+(const GaussianInt& a, const GaussianInt& b) {
        return {Int(a.re + b.re), Int(a.im + b.im)};
    }
    friend GaussianInt operator-(const GaussianInt& a, const GaussianInt& b) {
        return {Int(a.re - b.re), Int(a.im - b.im)};
    }
    friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
        return {Int(a.re * b.re - a.im * b.im), Int(a.re * b.im + a.im * b.re)};
    }
    GaussianInt operator-() const { return {Int(-re), Int(-im)}; }

    GaussianInt& operator+=(const GaussianInt& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianInt& operator-=(const GaussianInt& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianInt& operator*=(const GaussianInt& o) {
        *this = *this * o;
        return *this;
    }

    friend bool operator==(const GaussianInt& a, const GaussianInt& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianInt& a, const GaussianInt& b) { return !(a == b); }

    // lexicographic (re, im); used only for canonical output ordering
    friend bool operator<(const GaussianInt& a, const GaussianInt& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }

    friend std::ostream& operator<<(std::ostream& os, const GaussianInt& g) {
        return os << to_entry_string(g);
    }

    friend std::string to_entry_string(const GaussianInt& g) {
        if (g.im == 0) return int_to_string(g.re);
        std::string im_part = int_to_string(g.im) + "i";
        if (g.re == 0) return im_part;
        return int_to_string(g.re) + (g.im < 0 ? "" : "+") + im_part;
    }
};

template <class Int>
GaussianInt<Int> conj_of(const GaussianInt<Int>& g) {
    return {g.re, Int(-g.im)};
}

template <class Int>
Int sqmag(const GaussianInt<Int>& g) {
    return Int(g.re * g.re + g.im * g.im);
}

template <class Int>
bool is_zero(const GaussianInt<Int>& g) {
    return g.re == 0 && g.im == 0;
}

// Exact quotient a/b in Z[i]; throws if b does not divide a.
template <class Int>
GaussianInt<Int> exact_div(const GaussianInt<Int>& a, const GaussianInt<Int>& b) {
    GaussianInt<Int> num = a * conj_of(b);
    Int den = sqmag(b);
    return {exact_div_int(num.re, den), exact_div_int(num.im, den)};
}

// Multiplication by i^q, q in {0,1,2,3}.
template <class Int>
GaussianInt<Int> apply_quarter_turns(const GaussianInt<Int>& g, int q) {
    switch (q & 3) {
        case 0: return g;
        case 1: return {Int(-g.im), g.re};
        case 2: return {Int(-g.re), Int(-g.im)};
        default: return {g.im, Int(-g.re)};
    }
}

// real-scalar overloads so enumeration kernels can run on plain integers
inline std::int64_t conj_of(std::int64_t v) { return v; }
inline std::int64_t sqmag(std::int64_t v) { return v * v; }
inline bool is_zero(std::int64_t v) { return v == 0; }
inline std::int64_t exact_div(std::int64_t a, std::int64_t b) { return exact_div_int(a, b); }
inline std::int64_t apply_quarter_turns(std::int64_t v, int q) {
    switch (q & 3) {
        case 0: return v;
        case 2: return -v;
        default: throw std::domain_error("imaginary rotation applied to a real scalar");
    }
}
inline mpz_class conj_of(const mpz_class& v) { return v; }
inline mpz_class sqmag(const mpz_class& v) { return v * v; }
inline bool is_zero(const mpz_class& v) { return v == 0; }
inline std::string to_entry_string(std::int64_t v) { return std::to_string(v); }
inline std::string to_entry_string(const mpz_class& v) { return v.get_str(); }

using GaussInt = GaussianInt<mpz_class>;
using GaussInt64 = GaussianInt<std::int64_t>;

inline GaussInt gauss_i() { return {mpz_class(0), mpz_class(1)}; }

// conversions between backends / real scalars
template <class To>
To scalar_from_gauss(const GaussInt& g);

template <>
inline GaussInt scalar_from_gauss<GaussInt>(const GaussInt& g) {
    return g;
}
template <>
inline GaussInt64 scalar_from_gauss<GaussInt64>(const GaussInt& g) {
    return {to_int64(g.re), to_int64(g.im)};
}
template <>
inline std::int64_t scalar_from_gauss<std::int64_t>(const GaussInt& g) {
    if (g.im != 0) throw std::domain_error("complex entry in a real-only context: " + to_entry_string(g));
    return to_int64(g.re);
}

inline GaussInt gauss_promote(const GaussInt& g) { return g; }
inline GaussInt gauss_promote(const GaussInt64& g) {
    return {mpz_class(static_cast<long>(g.re)), mpz_class(static_cast<long>(g.im))};
}
inline GaussInt gauss_promote(std::int64_t v) { return {mpz_class(static_cast<long>(v)), mpz_class(0)}; }
inline GaussInt gauss_promote(const mpz_class& v) { return {v, mpz_class(0)}; }

template <class Scalar>
constexpr bool scalar_is_real() {
    return std::is_same_v<Scalar, std::int64_t> || std::is_same_v<Scalar, mpz_class>;
}

// ---------------------------------------------------------------------------
// Subdiagonal unit i^q for q quarter turns: one of {1, i, -1, -i}.

struct SubdiagAngle {
    std::uint8_t quarter_turns = 0;

    SubdiagAngle() = default;
    explicit SubdiagAngle(int q) : quarter_turns(static_cast<std::uint8_t>(q)) {
        if (q < 0 || q > 3) throw std::invalid_argument("subdiagonal angle must be 0..3 quarter turns");
    }

    template <class Scalar>
    Scalar unit() const {
        return apply_quarter_turns(Scalar(1), quarter_turns);
    }

    bool is_real() const { return (quarter_turns & 1) == 0; }
    SubdiagAngle negated() const { return SubdiagAngle((quarter_turns + 2) & 3); }
    SubdiagAngle conjugated() const { return SubdiagAngle((4 - quarter_turns) & 3); }

    friend bool operator==(SubdiagAngle a, SubdiagAngle b) { return a.quarter_turns == b.quarter_turns; }
    friend bool operator!=(SubdiagAngle a, SubdiagAngle b) { return !(a == b); }
};

}  // namespace bohemian

namespace Eigen {

template <class Int>
struct NumTraits<bohemian::GaussianInt<Int>> {
    using Self = bohemian::GaussianInt<Int>;
    using Real = Self;
    using NonInteger = Self;
    using Literal = Self;
    using Nested = Self;
    enum {
        IsComplex = 0,  // conjugation is handled explicitly, not by Eigen
        IsInteger = 1,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 8,
        MulCost = 16
    };
    static Self epsilon() { return Self(); }
    static Self dummy_precision() { return Self(); }
    static int digits10() { return 0; }
};

}  // namespace Eigen

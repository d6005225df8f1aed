#pragma once

// Dense univariate polynomials over an exact ring scalar, ascending powers.
// Characteristic polynomials produced by this library are monic with the
// leading 1 stored explicitly; nothing here trims a leading coefficient.

#include "bohemian/gaussint.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace bohemian {

template <class Scalar>
struct Polynomial {
    std::vector<Scalar> coeff;  // coeff[j] multiplies z^j

    Polynomial() = default;
    Polynomial(int v) : coeff{Scalar(v)} {}  // NOLINT: ring literal, lets Polynomial act as a Bareiss scalar
    explicit Polynomial(std::vector<Scalar> c) : coeff(std::move(c)) {}

    static Polynomial constant(Scalar v) { return Polynomial{{std::move(v)}}; }
    static Polynomial one() { return constant(Scalar(1)); }

    int degree() const { return static_cast<int>(coeff.size()) - 1; }
    bool empty() const { return coeff.empty(); }

    const Scalar& operator[](std::size_t j) const { return coeff[j]; }
    Scalar& operator[](std::size_t j) { return coeff[j]; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeff == b.coeff; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
};

using Poly = Polynomial<GaussInt>;

template <class Scalar>
bool is_zero(const Polynomial<Scalar>& p) {
    for (const auto& c : p.coeff)
        if (!is_zero(c)) return false;
    return true;
}

// drops zero leading terms; keeps at least the constant term
template <class Scalar>
void poly_trim(Polynomial<Scalar>& p) {
    while (p.coeff.size() > 1 && is_zero(p.coeff.back())) p.coeff.pop_back();
}

template <class Scalar>
Polynomial<Scalar> operator+(const Polynomial<Scalar>& a, const Polynomial<Scalar>& b) {
    Polynomial<Scalar> r;
    r.coeff.resize(std::max(a.coeff.size(), b.coeff.size()), Scalar(0));
    for (std::size_t j = 0; j < a.coeff.size(); ++j) r.coeff[j] += a.coeff[j];
    for (std::size_t j = 0; j < b.coeff.size(); ++j) r.coeff[j] += b.coeff[j];
    return r;
}

template <class Scalar>
Polynomial<Scalar> operator-(const Polynomial<Scalar>& a, const Polynomial<Scalar>& b) {
    Polynomial<Scalar> r;
    r.coeff.resize(std::max(a.coeff.size(), b.coeff.size()), Scalar(0));
    for (std::size_t j = 0; j < a.coeff.size(); ++j) r.coeff[j] += a.coeff[j];
    for (std::size_t j = 0; j < b.coeff.size(); ++j) r.coeff[j] -= b.coeff[j];
    return r;
}

template <class Scalar>
Polynomial<Scalar> operator-(const Polynomial<Scalar>& a) {
    Polynomial<Scalar> r = a;
    for (auto& c : r.coeff) c = -c;
    return r;
}

template <class Scalar>
Polynomial<Scalar> operator*(const Polynomial<Scalar>& a, const Polynomial<Scalar>& b) {
    if (a.empty() || b.empty()) return Polynomial<Scalar>{};
    Polynomial<Scalar> r;
    r.coeff.assign(a.coeff.size() + b.coeff.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeff.size(); ++i) {
        if (is_zero(a.coeff[i])) continue;
        for (std::size_t j = 0; j < b.coeff.size(); ++j) r.coeff[i + j] += a.coeff[i] * b.coeff[j];
    }
    return r;
}

template <class Scalar>
Polynomial<Scalar> operator*(const Scalar& s, const Polynomial<Scalar>& p) {
    Polynomial<Scalar> r = p;
    for (auto& c : r.coeff) c = s * c;
    return r;
}

// p(z) * z^k
template <class Scalar>
Polynomial<Scalar> poly_shift(const Polynomial<Scalar>& p, int k) {
    Polynomial<Scalar> r;
    r.coeff.assign(p.coeff.size() + static_cast<std::size_t>(k), Scalar(0));
    std::copy(p.coeff.begin(), p.coeff.end(), r.coeff.begin() + k);
    return r;
}

template <class Scalar>
Scalar poly_eval(const Polynomial<Scalar>& p, const Scalar& z) {
    Scalar acc(0);
    for (auto it = p.coeff.rbegin(); it != p.coeff.rend(); ++it) acc = acc * z + *it;
    return acc;
}

// Exact quotient a/b; throws unless b divides a in R[z].  (When the quotient
// exists over an integral domain, every leading-coefficient division in the
// long division below is itself exact.)
template <class Scalar>
Polynomial<Scalar> exact_div(const Polynomial<Scalar>& a, const Polynomial<Scalar>& b) {
    Polynomial<Scalar> rem = a;
    Polynomial<Scalar> div = b;
    poly_trim(rem);
    poly_trim(div);
    if (is_zero(div)) throw std::domain_error("polynomial division by zero");
    if (is_zero(rem)) return Polynomial<Scalar>::constant(Scalar(0));
    int dq = rem.degree() - div.degree();
    if (dq < 0) throw std::domain_error("inexact polynomial division");
    Polynomial<Scalar> q;
    q.coeff.assign(static_cast<std::size_t>(dq) + 1, Scalar(0));
    for (int k = dq; k >= 0; --k) {
        const Scalar& lead = rem.coeff[static_cast<std::size_t>(k + div.degree())];
        if (is_zero(lead)) continue;
        Scalar f = exact_div(lead, div.coeff.back());
        q.coeff[static_cast<std::size_t>(k)] = f;
        for (int j = 0; j <= div.degree(); ++j)
            rem.coeff[static_cast<std::size_t>(k + j)] -= f * div.coeff[static_cast<std::size_t>(j)];
    }
    if (!is_zero(rem)) throw std::domain_error("inexact polynomial division");
    return q;
}

template <class Scalar>
std::string to_entry_string(const Polynomial<Scalar>& p) {
    std::string s = "[";
    for (std::size_t j = 0; j < p.coeff.size(); ++j) {
        if (j) s += ",";
        s += to_entry_string(p.coeff[j]);
    }
    return s + "]";
}

// ---------------------------------------------------------------------------
// Heights.  Compared through squared magnitudes so that entries like 1+i
// never force irrational intermediates; the magnitude itself is reported
// exactly when it is an integer (i.e. when the squared magnitude is a
// perfect square) and flagged otherwise.

struct Magnitude {
    mpz_class sq;      // squared magnitude, exact
    bool integral;     // true iff sqrt(sq) is an integer
    mpz_class value;   // the integer magnitude when integral, else floor(sqrt(sq))
};

inline Magnitude magnitude_from_sq(mpz_class sq) {
    Magnitude m;
    m.sq = std::move(sq);
    mpz_class root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), m.sq.get_mpz_t());
    m.integral = (rem == 0);
    m.value = root;
    return m;
}

struct HeightInfo {
    Magnitude height;
    std::vector<int> attaining;  // ascending indices of coefficients reaching the height
};

inline HeightInfo poly_height(const Poly& p) {
    if (p.empty()) throw std::invalid_argument("height of an empty coefficient list");
    mpz_class best = -1;
    std::vector<int> idx;
    for (std::size_t j = 0; j < p.coeff.size(); ++j) {
        mpz_class s = sqmag(p.coeff[j]);
        if (s > best) {
            best = s;
            idx.assign(1, static_cast<int>(j));
        } else if (s == best) {
            idx.push_back(static_cast<int>(j));
        }
    }
    return {magnitude_from_sq(best), std::move(idx)};
}

// kernels track only (max squared magnitude, largest attaining power)
template <class Scalar>
auto poly_max_sqmag(const Polynomial<Scalar>& p) {
    auto best = sqmag(p.coeff.at(0));
    int arg = 0;
    for (std::size_t j = 1; j < p.coeff.size(); ++j) {
        auto s = sqmag(p.coeff[j]);
        if (s >= best) {
            best = s;
            arg = static_cast<int>(j);
        }
    }
    return std::pair(best, arg);
}

}  // namespace bohemian

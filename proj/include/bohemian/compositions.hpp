#pragma once

// Symbolic constant-term polynomials over indeterminates t_1..t_n and their
// reading as integer compositions.
//
// Sign conventions: this module works with subdiagonal -1, where the
// determinant of the symbolic Toeplitz matrix satisfies the all-plus
// recurrence d_m = sum_k t_k d_{m-k}.  The rest of the library uses
// subdiagonal +1; a diagonal similarity maps between the two by flipping
// every even-indexed t_k, i.e. t'_k = (-1)^(k-1) t_k.

#include "bohemian/gaussint.hpp"

#include <map>
#include <string>
#include <vector>

namespace bohemian {

// Multivariate polynomial keyed by the multiset of parts a monomial uses:
// the key lists (part, multiplicity) pairs with parts ascending.  For the
// degree-n constant-term polynomial every stored key satisfies
// sum(part * multiplicity) = n.
struct MultiPoly {
    using Key = std::vector<std::pair<int, int>>;
    std::map<Key, mpz_class> terms;  // no zero coefficients stored

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms == b.terms; }
};

// d_n = sum_{k=1..n} t_k d_{n-k}, d_0 = 1; the coefficient of a parts
// multiset counts its distinct orderings.
MultiPoly composition_polynomial(int n);

// all compositions of n in lexicographic order; 2^(n-1) of them for n >= 1;
// capped at n <= 20
std::vector<std::vector<int>> enumerate_compositions(int n);

// aggregates an explicit composition list into parts-multiset monomials
MultiPoly aggregate_compositions(const std::vector<std::vector<int>>& comps);

// evaluate the constant-term machinery with t_1 shifted by -z, for a first
// row t given in the subdiagonal +1 convention; equals (-1)^n P_n(z) where
// P_n is the characteristic polynomial of the Toeplitz matrix with first
// row t and unit subdiagonal
GaussInt charpoly_from_compositions(const std::vector<GaussInt>& t, const GaussInt& z);

std::string multipoly_to_string(const MultiPoly& p);

}  // namespace bohemian

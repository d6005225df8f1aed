#pragma once

// The maximal-characteristic-height Toeplitz family: the extremal
// characteristic polynomials, their coefficient identities, Fibonacci
// bounds, and the growth-constant experiment.

#include "bohemian/matrix.hpp"
#include "bohemian/poly.hpp"

#include <string>
#include <vector>

namespace bohemian {

// Characteristic polynomial of the all-(-1) first-row Toeplitz matrix with
// unit subdiagonal, by the three-term recurrence
//   R_{m+1} = (z+2) R_m - z R_{m-1},  R_0 = 1, R_1 = 1+z.
// Coefficients are strictly positive integers and the polynomial is monic.
std::vector<mpz_class> max_height_coeffs(int n);
Poly max_height_charpoly(int n);

struct MaxHeightRecord {
    int n = 0;
    mpz_class tau;          // maximal characteristic height
    int mu = 0;             // largest power attaining it
    mpz_class family_count; // 2 * 3^mu
    mpq_class lower_bound;  // F_{2n+1} / (n+1)
    mpz_class upper_bound;  // F_{2n+1}
    std::string c_n;        // tau * sqrt(n+1) / F_{2n+1}, decimal at the given precision
};

MaxHeightRecord max_height_record(int n, int precision_digits = 50);

// The maximal-height members of the dimension-n Toeplitz family over
// {-1,0,1}: prefix t_k = -1 or t_k = (-1)^(k-1) for k <= n-mu, trailing mu
// entries free over {-1,0,1}.  Every returned matrix is verified to attain
// the height; duplicates (possible only at n = 1) are removed.
std::vector<UHTMatrix> max_height_toeplitz_family(int n);

// Extremal first-row patterns over a finite real set F (|F| >= 2):
// all-min when |min| >= |max|, alternating max,min,... when |max| >= |min|,
// both on a tie.
std::vector<std::vector<mpz_class>> max_height_patterns(const std::vector<mpz_class>& f, int n);

// ---------------------------------------------------------------------------
// Coefficient identities.  p(n, k) denotes coefficient k of the degree-n
// extremal polynomial.

// T(n, k) = sum_j C(k+j, k-1) C(n-k-1, j) for k < n, T(n, n) = 1;
// p(n, k) = T(n+1, k+1).
mpz_class coeff_binomial_sum(int n, int k);

// Hypergeometric form (k+1) * sum_m (k+2)^{rising m} (n-k-1)^{falling m} /
// ((2)^{rising m} m!): exact over the rationals, must clear to an integer.
mpz_class coeff_rising_factorial(int n, int k);

// First `count` Taylor coefficients of ((1-x)/(1-2x))^(i+1); coefficient
// x^(n-i) equals p(n, i).
std::vector<mpz_class> coeff_series_column(int i, int count);

// Expands (1-x) / (z x^2 - (z+2) x + 1) as a power series in x by generic
// truncated series division and compares against the recurrence polynomials.
bool series_matches_charpolys(int count);

// Closed form: binomial double sum in (z/2 + 1) and (1 + z^2/4), evaluated
// over exact rationals; every coefficient must clear to an integer.
Poly max_height_charpoly_closed_form(int n);

// ---------------------------------------------------------------------------

// fast doubling, F_0 = 0, F_1 = 1
mpz_class fibonacci(unsigned long k);

struct BoundCheck {
    int n = 0;
    mpq_class lower;   // F_{2n+1}/(n+1)
    mpz_class tau;
    mpz_class upper;   // F_{2n+1}
    bool fib_identity = false;  // coefficient sum equals F_{2n+1}
    bool strict = false;        // lower < tau < upper (fails at n = 1, reported not patched)
};

BoundCheck height_bounds_check(int n);

struct GrowthRow {
    int n = 0;
    mpz_class tau;
    int mu = 0;
    mpz_class family_count;
    std::string fib_lower;  // F_{2n+1}/(n+1), decimal at the configured precision
    std::string fib_upper;  // F_{2n+1}, exact
    std::string c_n;        // tau sqrt(n+1) / F_{2n+1}
    std::string s_n;        // (n+1) (G_n / tau - 1) with G_n = C F_{2n+1} / sqrt(n+1)
};

// incremental over n; the reference constant C = 0.7701532 enters only s_n
std::vector<GrowthRow> height_growth_table(int n_max, int precision_digits = 50);

std::string growth_table_csv(const std::vector<GrowthRow>& rows);

// C_n at index n alone (high-precision decimal string)
std::string growth_constant(int n, int precision_digits = 50);

}  // namespace bohemian

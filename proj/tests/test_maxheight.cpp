#include "bohemian/charpoly.hpp"
#include "bohemian/enumerate.hpp"
#include "bohemian/maxheight.hpp"

#include <doctest.h>

#include <set>

using namespace bohemian;

namespace {

std::vector<mpz_class> z(std::vector<long> v) {
    return std::vector<mpz_class>(v.begin(), v.end());
}

// all 3^n Toeplitz first rows over {-1,0,1}, heights via the elimination
// oracle; returns (max squared height, attaining first rows)
std::pair<mpz_class, std::set<std::vector<long>>> brute_force_toeplitz_max(int n) {
    std::uint64_t card = 1;
    for (int k = 0; k < n; ++k) card *= 3;
    mpz_class best = -1;
    std::set<std::vector<long>> arg;
    for (std::uint64_t idx = 0; idx < card; ++idx) {
        std::uint64_t rest = idx;
        std::vector<long> digits(static_cast<std::size_t>(n));
        std::vector<GaussInt> row;
        for (int k = 0; k < n; ++k) {
            digits[static_cast<std::size_t>(k)] = static_cast<long>(rest % 3) - 1;
            row.emplace_back(mpz_class(digits[static_cast<std::size_t>(k)]), mpz_class(0));
            rest /= 3;
        }
        mpz_class h = poly_height(charpoly_bareiss(UHTMatrix(n, row).expand())).height.sq;
        if (h > best) {
            best = h;
            arg.clear();
        }
        if (h == best) arg.insert(digits);
    }
    return {best, arg};
}

}  // namespace

TEST_CASE("extremal charpoly recurrence: frozen initial values") {
    CHECK(max_height_coeffs(0) == z({1}));
    CHECK(max_height_coeffs(1) == z({1, 1}));
    CHECK(max_height_coeffs(2) == z({2, 2, 1}));
    CHECK(max_height_coeffs(4) == z({8, 12, 9, 4, 1}));
    for (int n = 0; n <= 40; ++n)
        for (const auto& c : max_height_coeffs(n)) CHECK(c > 0);
}

TEST_CASE("extremal height equals brute force over the whole Toeplitz family, n<=6") {
    for (int n = 1; n <= 6; ++n) {
        auto [sq, rows] = brute_force_toeplitz_max(n);
        MaxHeightRecord rec = max_height_record(n);
        CHECK(rec.tau * rec.tau == sq);

        auto family = max_height_toeplitz_family(n);
        std::set<std::vector<long>> family_rows;
        for (const auto& m : family) {
            std::vector<long> r;
            for (const auto& e : m.first_row) r.push_back(e.re.get_si());
            family_rows.insert(std::move(r));
        }
        CHECK(family_rows == rows);
    }
}

TEST_CASE("records match the published table rows that the recurrence reproduces") {
    auto r2 = max_height_record(2);
    CHECK(r2.tau == 2);
    CHECK(r2.mu == 1);
    CHECK(r2.family_count == 6);
    auto r6 = max_height_record(6);
    CHECK(r6.tau == 66);
    CHECK(r6.mu == 2);
    CHECK(r6.family_count == 18);
    auto r10 = max_height_record(10);
    CHECK(r10.tau == 2528);
    CHECK(r10.mu == 3);
    CHECK(r10.family_count == 54);
}

TEST_CASE("family membership count and per-member height/mu, n<=10") {
    for (int n = 2; n <= 10; ++n) {
        MaxHeightRecord rec = max_height_record(n);
        auto family = max_height_toeplitz_family(n);
        CHECK(mpz_class(static_cast<long>(family.size())) == rec.family_count);
        for (const auto& m : family) {
            auto [sq, arg] = poly_max_sqmag(charpoly_toeplitz(m));
            CHECK(sq == rec.tau * rec.tau);
            CHECK(arg == rec.mu);  // largest attaining power is shared family-wide
        }
    }
}

TEST_CASE("alternating first row reaches the same height and peak power") {
    for (int n = 2; n <= 10; ++n) {
        std::vector<GaussInt> alt;
        for (int k = 0; k < n; ++k) alt.emplace_back(mpz_class(k % 2 == 0 ? 1 : -1), mpz_class(0));
        auto [sq, arg] = poly_max_sqmag(charpoly_toeplitz(UHTMatrix(n, alt)));
        MaxHeightRecord rec = max_height_record(n);
        CHECK(sq == rec.tau * rec.tau);
        CHECK(arg == rec.mu);
    }
}

TEST_CASE("extremal pattern rules over real sets") {
    auto both = max_height_patterns(z({-1, 0, 1}), 4);
    REQUIRE(both.size() == 2);
    CHECK(both[0] == z({-1, -1, -1, -1}));
    CHECK(both[1] == z({1, -1, 1, -1}));
    auto neg = max_height_patterns(z({-2, 1}), 3);
    REQUIRE(neg.size() == 1);
    CHECK(neg[0] == z({-2, -2, -2}));
    auto pos = max_height_patterns(z({-1, 2}), 4);
    REQUIRE(pos.size() == 1);
    CHECK(pos[0] == z({2, -1, 2, -1}));
    CHECK_THROWS_AS(max_height_patterns(z({3}), 2), std::invalid_argument);
}

TEST_CASE("coefficient identities: binomial, hypergeometric, series column, closed form") {
    CHECK(coeff_binomial_sum(3, 1) == 2);
    for (int n = 1; n <= 12; ++n) CHECK(coeff_binomial_sum(n, n) == 1);
    CHECK(coeff_rising_factorial(3, 1) == 5);
    CHECK(coeff_rising_factorial(5, 5) == 1);
    CHECK_THROWS_AS(coeff_binomial_sum(3, 0), std::invalid_argument);

    for (int n = 0; n <= 30; ++n) {
        auto coeffs = max_height_coeffs(n);
        for (int k = 0; k <= n; ++k) {
            const mpz_class& expect = coeffs[static_cast<std::size_t>(k)];
            CHECK(coeff_binomial_sum(n + 1, k + 1) == expect);
            CHECK(coeff_rising_factorial(n, k) == expect);
        }
    }

    // column i of the generating function lists p(i, i), p(i+1, i), ...
    for (int i = 0; i <= 8; ++i) {
        auto col = coeff_series_column(i, 20);
        CHECK(col[0] == 1);
        for (int m = 0; m < 20; ++m) {
            int n = i + m;
            CHECK(col[static_cast<std::size_t>(m)] == max_height_coeffs(n)[static_cast<std::size_t>(i)]);
        }
    }
    auto col0 = coeff_series_column(0, 6);
    CHECK(col0 == z({1, 1, 2, 4, 8, 16}));

    CHECK(series_matches_charpolys(50));

    CHECK(max_height_charpoly_closed_form(0).coeff == Poly{{GaussInt(1)}}.coeff);
    for (int n = 0; n <= 64; ++n) {
        Poly cf = max_height_charpoly_closed_form(n);
        CHECK(cf == max_height_charpoly(n));
    }
}

TEST_CASE("fibonacci: frozen values and library cross-check") {
    std::vector<long> first = {0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55};
    for (std::size_t k = 0; k < first.size(); ++k) CHECK(fibonacci(static_cast<unsigned long>(k)) == first[k]);
    CHECK(fibonacci(19) == 4181);
    CHECK(fibonacci(21) == 10946);
    for (unsigned long k = 0; k <= 300; ++k) {
        mpz_class ref;
        mpz_fib_ui(ref.get_mpz_t(), k);
        CHECK(fibonacci(k) == ref);
    }
}

TEST_CASE("height bounds: identity and strictness") {
    // coefficient sums are Fibonacci: 1+3+5+4 = 13 = F_7
    BoundCheck b3 = height_bounds_check(3);
    CHECK(b3.fib_identity);
    CHECK(b3.strict);
    BoundCheck b9 = height_bounds_check(9);
    CHECK(b9.tau == 1008);
    CHECK(b9.upper == 4181);
    CHECK(b9.lower == mpq_class(4181, 10));
    CHECK(b9.strict);
    // boundary at n=1: tau = 1 equals F_3/2, so strictness fails (reported, not patched)
    BoundCheck b1 = height_bounds_check(1);
    CHECK(b1.fib_identity);
    CHECK_FALSE(b1.strict);
    for (int n = 2; n <= 60; ++n) CHECK(height_bounds_check(n).strict);
}

TEST_CASE("growth table: table rows, constants and CSV shape") {
    auto rows = height_growth_table(30, 50);
    REQUIRE(rows.size() == 29);
    CHECK(rows[0].n == 2);
    CHECK(rows[0].tau == 2);
    CHECK(rows[0].fib_upper == "5");  // F_5
    CHECK(rows[8].n == 10);
    CHECK(rows[8].tau == 2528);
    CHECK(rows[8].mu == 3);
    CHECK(rows[8].family_count == 54);
    CHECK(rows[8].fib_upper == "10946");  // F_21

    // C_10 = 2528 sqrt(11) / 10946 = 0.765983...
    double c10 = std::stod(rows[8].c_n);
    CHECK(c10 == doctest::Approx(0.765983).epsilon(1e-4));
    CHECK(rows[8].c_n == growth_constant(10, 50));

    for (const auto& r : rows) {
        CHECK(!r.s_n.empty());
        double s = std::stod(r.s_n);
        CHECK(std::isfinite(s));
    }

    std::string csv = growth_table_csv(rows);
    CHECK(csv.rfind("n,tau,mu,count,fib_lower,fib_upper,C_n,s_n\n", 0) == 0);

    // a loose sanity window for a mid-size constant
    double c30 = std::stod(growth_constant(30, 50));
    CHECK(c30 > 0.7);
    CHECK(c30 < 0.85);
}

TEST_CASE("exhaustive Hessenberg maximum equals the Toeplitz extremal height, n<=4") {
    for (int n = 2; n <= 4; ++n) {
        EnumerationPlan plan;
        plan.family.shape = Shape::upper_hessenberg;
        plan.family.n = n;
        plan.family.population = pop_pm1_0();
        plan.predicates = {Predicate::max_char_height};
        ClassCounts counts = enumerate(plan);
        MaxHeightRecord rec = max_height_record(n);
        CHECK(counts.max_char_height.sq == rec.tau * rec.tau);
    }
}

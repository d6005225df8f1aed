#include "bohemian/charpoly.hpp"
#include "bohemian/compositions.hpp"
#include "bohemian/family.hpp"
#include "bohemian/maxheight.hpp"
#include "bohemian/rng.hpp"

#include <doctest.h>

using namespace bohemian;

namespace {

MultiPoly::Key key(std::vector<std::pair<int, int>> parts) { return parts; }

mpz_class coefficient_mass(const MultiPoly& p) {
    mpz_class acc = 0;
    for (const auto& [k, c] : p.terms) acc += c;
    return acc;
}

}  // namespace

TEST_CASE("constant-term polynomial: worked low degrees") {
    CHECK(composition_polynomial(0).terms.size() == 1);
    CHECK(composition_polynomial(0).terms.at(key({})) == 1);

    // degree 4: t1^4 + 3 t1^2 t2 + 2 t1 t3 + t2^2 + t4
    MultiPoly p4 = composition_polynomial(4);
    CHECK(p4.terms.size() == 5);
    CHECK(p4.terms.at(key({{1, 4}})) == 1);
    CHECK(p4.terms.at(key({{1, 2}, {2, 1}})) == 3);
    CHECK(p4.terms.at(key({{1, 1}, {3, 1}})) == 2);
    CHECK(p4.terms.at(key({{2, 2}})) == 1);
    CHECK(p4.terms.at(key({{4, 1}})) == 1);

    // degree 5: t1^5 + 4 t1^3 t2 + 3 t1^2 t3 + 3 t1 t2^2 + 2 t1 t4 + 2 t2 t3 + t5
    MultiPoly p5 = composition_polynomial(5);
    CHECK(p5.terms.size() == 7);
    CHECK(p5.terms.at(key({{1, 5}})) == 1);
    CHECK(p5.terms.at(key({{1, 3}, {2, 1}})) == 4);
    CHECK(p5.terms.at(key({{1, 2}, {3, 1}})) == 3);
    CHECK(p5.terms.at(key({{1, 1}, {2, 2}})) == 3);
    CHECK(p5.terms.at(key({{1, 1}, {4, 1}})) == 2);
    CHECK(p5.terms.at(key({{2, 1}, {3, 1}})) == 2);
    CHECK(p5.terms.at(key({{5, 1}})) == 1);

    // every monomial encodes a multiset of parts summing to n
    for (int n = 0; n <= 12; ++n)
        for (const auto& [k, c] : composition_polynomial(n).terms) {
            int total = 0;
            for (auto [part, mult] : k) total += part * mult;
            CHECK(total == n);
            CHECK(c > 0);
        }
}

TEST_CASE("composition counts and lexicographic enumeration") {
    CHECK(enumerate_compositions(1) == std::vector<std::vector<int>>{{1}});
    CHECK(enumerate_compositions(3) ==
          std::vector<std::vector<int>>{{1, 1, 1}, {1, 2}, {2, 1}, {3}});
    CHECK(enumerate_compositions(4).size() == 8);
    for (int n = 1; n <= 12; ++n)
        CHECK(enumerate_compositions(n).size() == (1ULL << (n - 1)));
    CHECK_THROWS_AS(enumerate_compositions(21), BudgetExceeded);

    // coefficient mass = number of compositions = evaluation at all t = 1
    for (int n = 1; n <= 14; ++n)
        CHECK(coefficient_mass(composition_polynomial(n)) == mpz_class(1) << (n - 1));

    // the aggregated enumeration reproduces the symbolic recurrence
    for (int n = 0; n <= 14; ++n)
        CHECK(aggregate_compositions(enumerate_compositions(n)) == composition_polynomial(n));
}

TEST_CASE("distinct monomials count partitions of n") {
    // partition numbers 1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42
    std::vector<std::size_t> partitions = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (std::size_t n = 0; n < partitions.size(); ++n)
        CHECK(composition_polynomial(static_cast<int>(n)).terms.size() == partitions[n]);
}

TEST_CASE("sign bridge to the extremal constant coefficients") {
    // the all-(-1) first row (unit subdiagonal) has constant coefficient
    // equal to the all-ones evaluation here: both satisfy the same all-plus
    // recurrence
    for (int n = 1; n <= 14; ++n) {
        mpz_class expect = max_height_coeffs(n)[0];
        CHECK(coefficient_mass(composition_polynomial(n)) == expect);
    }
}

TEST_CASE("substitution reproduces (-1)^n times the characteristic polynomial") {
    // shift matrix, z = 2, n = 3: P_3(z) = z^3, so expect -8
    std::vector<GaussInt> zero3 = {GaussInt(0), GaussInt(0), GaussInt(0)};
    CHECK(charpoly_from_compositions(zero3, GaussInt(2)) == GaussInt(-8));

    // all -1 first row, z = 1: P_3(1) = 13, expect -13
    std::vector<GaussInt> mm = {GaussInt(-1), GaussInt(-1), GaussInt(-1)};
    CHECK(charpoly_from_compositions(mm, GaussInt(1)) == GaussInt(-13));

    // random rows over {-1,0,1} vs the Toeplitz recurrence at sample points
    for (std::uint64_t s = 0; s < 40; ++s) {
        SampleStream stream(31, s);
        int n = 1 + static_cast<int>(stream.next_below(6));
        std::vector<GaussInt> t;
        for (int k = 0; k < n; ++k) t.emplace_back(mpz_class(static_cast<long>(stream.next_below(3)) - 1), mpz_class(0));
        Poly p = charpoly_toeplitz(UHTMatrix(n, t));
        for (long zv = -5; zv <= 5; ++zv) {
            GaussInt expected = poly_eval(p, GaussInt(zv));
            if (n % 2 == 1) expected = -expected;
            CHECK(charpoly_from_compositions(t, GaussInt(zv)) == expected);
        }
    }
}

TEST_CASE("string rendering") {
    CHECK(multipoly_to_string(composition_polynomial(0)) == "1");
    CHECK(multipoly_to_string(composition_polynomial(2)) == "t1^2 + t2");
}

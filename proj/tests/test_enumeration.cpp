#include "bohemian/classify.hpp"
#include "bohemian/enumerate.hpp"
#include "bohemian/maxheight.hpp"
#include "bohemian/roots.hpp"

#include <doctest.h>

using namespace bohemian;

namespace {

FamilySpec family(Shape shape, int n, Population pop, bool zero_diag = false) {
    FamilySpec f;
    f.shape = shape;
    f.n = n;
    f.population = std::move(pop);
    f.zero_diagonal = zero_diag;
    return f;
}

}  // namespace

TEST_CASE("classifier basics") {
    GMatrix zero = GMatrix::Zero(3, 3);
    GMatrix id = GMatrix::Identity(3, 3);
    CHECK(is_singular(zero));
    CHECK_FALSE(is_singular(id));
    CHECK(is_nilpotent(zero));
    CHECK_FALSE(is_nilpotent(id));
    CHECK(is_normal(id));

    UHTMatrix shift(4, {GaussInt(0), GaussInt(0), GaussInt(0), GaussInt(0)});
    CHECK(is_nilpotent(shift.expand()));
    CHECK(is_type2_stable(shift.expand()));
    CHECK_FALSE(is_type2_stable(id));

    GMatrix m1(1, 1);
    m1(0, 0) = GaussInt(-1);
    CHECK(is_type1_stable(m1));
    m1(0, 0) = GaussInt(0);
    CHECK_FALSE(is_type1_stable(m1));
}

TEST_CASE("routh tabulation on known polynomials") {
    // z^2 + 2z + 2: roots -1 +- i
    CHECK(routh_strictly_stable({mpz_class(2), mpz_class(2), mpz_class(1)}));
    // z^2 + 1: marginal
    CHECK_FALSE(routh_strictly_stable({mpz_class(1), mpz_class(0), mpz_class(1)}));
    // z^3: zero row
    CHECK_FALSE(routh_strictly_stable({mpz_class(0), mpz_class(0), mpz_class(0), mpz_class(1)}));
    // (z+1)^3 = z^3 + 3z^2 + 3z + 1
    CHECK(routh_strictly_stable({mpz_class(1), mpz_class(3), mpz_class(3), mpz_class(1)}));
    // z^3 + z^2 + z + 1 = (z+1)(z^2+1): marginal pair
    CHECK_FALSE(routh_strictly_stable({mpz_class(1), mpz_class(1), mpz_class(1), mpz_class(1)}));
    // trace-zero necessary failure: z^2 - 1
    CHECK_FALSE(routh_strictly_stable({mpz_class(-1), mpz_class(0), mpz_class(1)}));
}

TEST_CASE("normal matrices in zero-diagonal families follow the two-pattern rule") {
    // n = 4 over {0, i, -i}: exactly the i / -i skew patterns
    auto counts = enumerate([&] {
        EnumerationPlan p;
        p.family = family(Shape::upper_hessenberg, 4, pop_0i(), true);
        p.predicates = {Predicate::normal};
        return p;
    }());
    CHECK(counts.total == 729);  // 3^6 free strictly-upper positions
    CHECK(counts.count(Predicate::normal) == 4);

    // explicit pattern matrices are normal
    for (const GaussInt& w : {gauss_i(), -gauss_i()}) {
        CHECK(is_normal(skew_symmetric_normal(4, w).expand()));
        CHECK(is_normal(skew_circulant_normal(4, w).expand()));
    }

    // {-1,0,1}: 4 at n=3,4; {0,1}: 2; n=2 coalesces to m
    auto run = [&](Population pop, int n) {
        EnumerationPlan p;
        p.family = family(Shape::upper_hessenberg, n, std::move(pop), true);
        p.predicates = {Predicate::normal};
        return enumerate(p).count(Predicate::normal);
    };
    CHECK(run(pop_pm1_0(), 3) == 4);
    CHECK(run(pop_pm1_0(), 4) == 4);
    CHECK(run(pop_01(), 3) == 2);
    CHECK(run(pop_01(), 4) == 2);
    CHECK(run(pop_pm1_0(), 2) == 2);
    CHECK(run(pop_01(), 2) == 1);
    CHECK(run(pop_0i(), 2) == 2);
}

TEST_CASE("singular counts over the full family, small dimensions") {
    auto run = [&](int n) {
        EnumerationPlan p;
        p.family = family(Shape::full, n, pop_pm1_0());
        p.predicates = {Predicate::singular};
        return enumerate(p);
    };
    auto c1 = run(1);
    CHECK(c1.total == 3);
    CHECK(c1.count(Predicate::singular) == 1);
    auto c2 = run(2);
    CHECK(c2.total == 81);
    CHECK(c2.count(Predicate::singular) == 33);
    auto c3 = run(3);
    CHECK(c3.total == 19683);
    CHECK(c3.count(Predicate::singular) == 7875);
}

TEST_CASE("zero-diagonal families contain no strictly Hurwitz-stable matrix") {
    EnumerationPlan p;
    p.family = family(Shape::upper_hessenberg, 3, pop_pm1_0(), true);
    p.predicates = {Predicate::type1_stable};
    auto counts = enumerate(p);
    CHECK(counts.total == 27);
    CHECK(counts.count(Predicate::type1_stable) == 0);
}

TEST_CASE("unit-circle stability coincides with nilpotency, exhaustively at n=3") {
    EnumerationPlan p;
    p.family = family(Shape::upper_hessenberg, 3, pop_pm1_0());
    p.predicates = {Predicate::type2_stable, Predicate::nilpotent};
    auto counts = enumerate(p);
    CHECK(counts.count(Predicate::type2_stable) == counts.count(Predicate::nilpotent));
    CHECK(counts.count(Predicate::nonderogatory) == 0);  // not requested
}

TEST_CASE("single nilpotent member over {0,1}") {
    for (int n = 2; n <= 4; ++n) {
        EnumerationPlan p;
        p.family = family(Shape::upper_hessenberg, n, pop_01());
        p.predicates = {Predicate::nilpotent};
        CHECK(enumerate(p).count(Predicate::nilpotent) == 1);
    }
}

TEST_CASE("counts are independent of sharding and thread count") {
    EnumerationPlan base;
    base.family = family(Shape::upper_hessenberg, 3, pop_pm1_0());
    base.predicates = {Predicate::singular, Predicate::nilpotent, Predicate::max_char_height};
    base.count_distinct = true;
    ClassCounts ref = enumerate(base);
    for (int partitions : {1, 2, 3, 7}) {
        for (int jobs : {1, 2}) {
            EnumerationPlan p = base;
            p.partitions = partitions;
            p.jobs = jobs;
            ClassCounts c = enumerate(p);
            CHECK(c.total == ref.total);
            CHECK(c.counts == ref.counts);
            CHECK(c.max_char_height.sq == ref.max_char_height.sq);
            CHECK(c.max_char_height_count == ref.max_char_height_count);
            CHECK(c.distinct_charpolys == ref.distinct_charpolys);
        }
    }
}

TEST_CASE("sampled mode is reproducible and respects the seed") {
    EnumerationPlan p;
    p.family = family(Shape::full, 4, pop_pm1_0());
    p.predicates = {Predicate::singular};
    p.sample = EnumerationPlan::Sampled{20000, 12345};
    ClassCounts a = enumerate(p);
    p.jobs = 2;
    p.partitions = 5;
    ClassCounts b = enumerate(p);
    CHECK(a.total == 20000);
    CHECK(a.count(Predicate::singular) == b.count(Predicate::singular));
    // fraction should sit near 0.351 (the exhaustive n=4 ratio)
    double frac = double(a.count(Predicate::singular)) / double(a.total);
    CHECK(frac > 0.32);
    CHECK(frac < 0.38);

    p.sample = EnumerationPlan::Sampled{20000, 54321};
    ClassCounts c = enumerate(p);
    CHECK(c.count(Predicate::singular) != a.count(Predicate::singular));  // different seed, different draw
}

TEST_CASE("distinct characteristic polynomials") {
    // Toeplitz families: every member has its own characteristic polynomial
    for (int n = 1; n <= 5; ++n) {
        FamilySpec f = family(Shape::uh_toeplitz, n, pop_pm1_0());
        std::uint64_t expect = 1;
        for (int k = 0; k < n; ++k) expect *= 3;
        CHECK(distinct_charpolys(f) == expect);
    }
    // 2x2 upper Hessenberg over {0,1}: 8 members, 6 distinct polynomials
    FamilySpec f = family(Shape::upper_hessenberg, 2, pop_01());
    CHECK(distinct_charpolys(f) == 6);
}

TEST_CASE("database records: Toeplitz uniqueness and conservation") {
    FamilySpec f = family(Shape::uh_toeplitz, 4, pop_pm1_0());
    auto records = charpoly_database(f);
    CHECK(records.size() == 81);
    std::uint64_t mass = 0;
    for (const auto& r : records) {
        CHECK(r.matrix_count == 1);
        mass += r.matrix_count;
        CHECK(r.coeffs.coeff.back() == GaussInt(1));
    }
    CHECK(mass == 81);
    for (std::size_t i = 1; i < records.size(); ++i) {
        CHECK(std::lexicographical_compare(records[i - 1].coeffs.coeff.begin(), records[i - 1].coeffs.coeff.end(),
                                           records[i].coeffs.coeff.begin(), records[i].coeffs.coeff.end()));
    }

    FamilySpec h = family(Shape::upper_hessenberg, 2, pop_01());
    auto hrecords = charpoly_database(h);
    CHECK(hrecords.size() == 6);
    std::uint64_t hmass = 0;
    for (const auto& r : hrecords) hmass += r.matrix_count;
    CHECK(hmass == 8);
}

TEST_CASE("budget guard") {
    FamilySpec f = family(Shape::full, 4, pop_pm1_0());
    EnumerationPlan p;
    p.family = f;
    p.predicates = {Predicate::singular};
    p.budget = 1000;
    CHECK_THROWS_AS(enumerate(p), BudgetExceeded);
}

TEST_CASE("plan validation") {
    EnumerationPlan p;
    p.family = family(Shape::full, 2, pop_pm1_0());
    p.predicates = {Predicate::nonderogatory};
    CHECK_THROWS_AS(enumerate(p), std::invalid_argument);

    EnumerationPlan q;
    q.family = family(Shape::upper_hessenberg, 2, pop_0i());
    q.predicates = {Predicate::type1_stable};
    CHECK_THROWS_AS(enumerate(q), std::invalid_argument);

    CHECK_THROWS_AS(parse_predicate("bogus"), std::invalid_argument);
    CHECK(parse_predicate("singular") == Predicate::singular);
    CHECK(parse_predicate("max_char_height_attained") == Predicate::max_char_height);
}

TEST_CASE("zero-diagonal flag requires zero in the population") {
    FamilySpec f = family(Shape::upper_hessenberg, 3, pop_pm1(), true);
    CHECK_THROWS_AS(f.validate(), std::invalid_argument);
    // cardinality bookkeeping
    CHECK(family(Shape::full, 3, pop_pm1_0(), true).cardinality() == 729);          // 3^(9-3)
    CHECK(family(Shape::upper_hessenberg, 3, pop_pm1_0()).cardinality() == 729);    // 3^6
    CHECK(family(Shape::uh_toeplitz, 5, pop_pm1_0()).cardinality() == 243);         // 3^5
    CHECK(family(Shape::uh_toeplitz, 5, pop_pm1_0(), true).cardinality() == 81);    // t_1 pinned
}

TEST_CASE("numeric root radius") {
    // z^2 + 2z + 2: roots -1 +- i
    Poly p{{GaussInt(2), GaussInt(2), GaussInt(1)}};
    RootRadius r = numeric_root_radius(p);
    CHECK(r.max_modulus == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
    CHECK(r.max_real == doctest::Approx(-1.0).epsilon(1e-9));

    // z^n: all roots at the origin
    Poly zn{{GaussInt(0), GaussInt(0), GaussInt(0), GaussInt(0), GaussInt(1)}};
    RootRadius rz = numeric_root_radius(zn);
    CHECK(rz.max_modulus == 0.0);
    CHECK(rz.max_real == 0.0);

    // extremal degree-10 polynomial: negative trace but roots in the right half plane,
    // consistent with the exact verdict
    Poly p10 = max_height_charpoly(10);
    RootRadius r10 = numeric_root_radius(p10);
    CHECK(r10.max_real > 0.0);
    CHECK_FALSE(routh_strictly_stable(real_coefficients(p10)));
}

TEST_CASE("exact stability verdicts agree with the numeric radius when the margin is clear") {
    FamilySpec f = family(Shape::upper_hessenberg, 4, pop_pm1_0());
    MemberState<GaussInt> st(f);
    int compared = 0;
    for (std::uint64_t s = 0; s < 300; ++s) {
        SampleStream stream(77, s);
        for (std::size_t pidx = 0; pidx < st.digits.size(); ++pidx)
            st.apply(pidx, static_cast<std::uint8_t>(stream.next_below(3)));
        Poly cp = charpoly_hessenberg(st.hess);
        RootRadius r = numeric_root_radius(cp);
        if (std::abs(r.max_real) < 1e-6) continue;  // margin too thin for the float oracle
        ++compared;
        CHECK(routh_strictly_stable(real_coefficients(cp)) == (r.max_real < 0.0));
    }
    CHECK(compared > 100);
}

#include "bohemian/gaussint.hpp"
#include "bohemian/matrix.hpp"
#include "bohemian/poly.hpp"
#include "bohemian/population.hpp"
#include "bohemian/rng.hpp"

#include <doctest.h>

using namespace bohemian;

namespace {

// random Gaussian integer with components up to `bits` bits
GaussInt random_gauss(gmp_randclass& rng, unsigned bits) {
    mpz_class re = rng.get_z_bits(bits);
    mpz_class im = rng.get_z_bits(bits);
    if (rng.get_f() < 0.5) re = -re;
    if (rng.get_f() < 0.5) im = -im;
    return {re, im};
}

}  // namespace

TEST_CASE("gaussian integer ring laws on wide random operands") {
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(20260810UL);
    for (int trial = 0; trial < 200; ++trial) {
        GaussInt a = random_gauss(rng, 256);
        GaussInt b = random_gauss(rng, 256);
        GaussInt c = random_gauss(rng, 256);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(conj_of(a * b) == conj_of(a) * conj_of(b));
        CHECK(sqmag(a * b) == sqmag(a) * sqmag(b));
        CHECK(sqmag(a) >= 0);
        if (!is_zero(b)) CHECK(exact_div(a * b, b) == a);
    }
}

TEST_CASE("quarter turns agree with explicit unit multiplication") {
    GaussInt g{mpz_class(3), mpz_class(-7)};
    GaussInt i = gauss_i();
    GaussInt acc = g;
    for (int q = 0; q < 4; ++q) {
        CHECK(apply_quarter_turns(g, q) == acc);
        acc = acc * i;
    }
    CHECK(sqmag(SubdiagAngle(1).unit<GaussInt>()) == 1);
    CHECK(sqmag(SubdiagAngle(3).unit<GaussInt>()) == 1);
    CHECK(SubdiagAngle(1).negated() == SubdiagAngle(3));
    CHECK_THROWS_AS(SubdiagAngle(4), std::invalid_argument);
    CHECK_THROWS_AS(apply_quarter_turns(std::int64_t(5), 1), std::domain_error);
}

TEST_CASE("poly height: frozen examples") {
    // z^2 + 2z + 2
    Poly p{{GaussInt(2), GaussInt(2), GaussInt(1)}};
    HeightInfo h = poly_height(p);
    CHECK(h.height.sq == 4);
    CHECK(h.height.integral);
    CHECK(h.height.value == 2);
    CHECK(h.attaining == std::vector<int>{0, 1});

    // z^4 + 4z^3 + 9z^2 + 12z + 8
    Poly q{{GaussInt(8), GaussInt(12), GaussInt(9), GaussInt(4), GaussInt(1)}};
    HeightInfo hq = poly_height(q);
    CHECK(hq.height.value == 12);
    CHECK(hq.attaining == std::vector<int>{1});

    Poly one{{GaussInt(1)}};
    CHECK(poly_height(one).height.value == 1);
    CHECK(poly_height(one).attaining == std::vector<int>{0});

    CHECK_THROWS_AS(poly_height(Poly{}), std::invalid_argument);

    // 1+i has magnitude sqrt(2): flagged non-integral
    Poly c{{GaussInt{mpz_class(1), mpz_class(1)}}};
    CHECK_FALSE(poly_height(c).height.integral);
    CHECK(poly_height(c).height.sq == 2);
}

TEST_CASE("poly height invariance under unit scaling and negation") {
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(7UL);
    std::vector<GaussInt> units = {GaussInt(1), GaussInt(-1), gauss_i(), -gauss_i()};
    for (int trial = 0; trial < 50; ++trial) {
        Poly p;
        for (int j = 0; j < 6; ++j) p.coeff.push_back(random_gauss(rng, 64));
        HeightInfo base = poly_height(p);
        for (const auto& u : units) {
            Poly scaled = p;
            for (auto& cf : scaled.coeff) cf = cf * u;
            HeightInfo h = poly_height(scaled);
            CHECK(h.height.sq == base.height.sq);
            CHECK(h.attaining == base.attaining);
        }
    }
}

TEST_CASE("matrix height examples") {
    CHECK(matrix_height(UHMatrix::zero(3)).value == 1);  // unit subdiagonal
    UHTMatrix t(4, {GaussInt(-1), GaussInt(-1), GaussInt(-1), GaussInt(-1)});
    CHECK(matrix_height(t).value == 1);
    UHMatrix m = UHMatrix::zero(2);
    m.entry(0, 1) = gauss_i();
    CHECK(matrix_height(m).value == 1);
    CHECK(matrix_height(m).integral);
}

TEST_CASE("Toeplitz expansion round-trips its first row") {
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(11UL);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 1 + static_cast<int>(rng.get_z_range(7).get_ui());
        std::vector<GaussInt> row;
        for (int k = 0; k < n; ++k) row.push_back(random_gauss(rng, 32));
        UHTMatrix m(n, row, SubdiagAngle(static_cast<int>(rng.get_z_range(4).get_ui())));
        GMatrix d = m.expand();
        for (int k = 0; k < n; ++k)
            for (int i = 0; i + k < n; ++i) CHECK(d(i, i + k) == row[static_cast<std::size_t>(k)]);
        for (int i = 0; i + 1 < n; ++i) CHECK(d(i + 1, i) == m.subdiag.unit<GaussInt>());
        UpperHessenberg<GaussInt> h = m.expand_hessenberg();
        CHECK(exact_equal(h.expand(), d));
    }
}

TEST_CASE("population invariants and parsing") {
    CHECK_THROWS_AS(Population({GaussInt(1), GaussInt(1)}, "dup"), std::invalid_argument);
    Population p = parse_population("0,i,-i");
    CHECK(p.size() == 3);
    CHECK(p.contains(gauss_i()));
    CHECK(p.all_real() == false);
    CHECK(pop_pm1_0().all_real());
    CHECK(pop_gauss_units().invariant_under(SubdiagAngle(1)));
    CHECK_FALSE(pop_01().invariant_under(SubdiagAngle(2)));
    CHECK(parse_population("-1,0,1").elements == pop_pm1_0().elements);
    CHECK(parse_entry_token("3i") == GaussInt{mpz_class(0), mpz_class(3)});
    CHECK(parse_entry_token("-12") == GaussInt(-12));
}

TEST_CASE("counter rng is stateless across partitions") {
    SampleStream a(42, 1000);
    SampleStream b(42, 1000);
    for (int k = 0; k < 10; ++k) CHECK(a.next() == b.next());
    SampleStream c(42, 1001);
    CHECK(a.next() != c.next());  // overwhelmingly likely distinct streams
    SampleStream d(43, 1000);
    std::uint64_t v = d.next_below(3);
    CHECK(v < 3);
}

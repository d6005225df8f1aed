#include "bohemian/maxheight.hpp"

#include "bohemian/charpoly.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bohemian {

namespace {

Poly from_ints(const std::vector<mpz_class>& c) {
    Poly p;
    p.coeff.reserve(c.size());
    for (const auto& v : c) p.coeff.emplace_back(v, mpz_class(0));
    return p;
}

// max coefficient and its largest attaining index
std::pair<mpz_class, int> peak(const std::vector<mpz_class>& c) {
    mpz_class best = c[0];
    int arg = 0;
    for (std::size_t j = 1; j < c.size(); ++j)
        if (c[j] >= best) {
            best = c[j];
            arg = static_cast<int>(j);
        }
    return {best, arg};
}

mpz_class pow3(int e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 3, static_cast<unsigned long>(e));
    return r;
}

// decimal rendering of an mpf value
std::string mpf_to_decimal(const mpf_class& v, int digits) {
    mp_exp_t exp10 = 0;
    std::string mant = v.get_str(exp10, 10, static_cast<std::size_t>(digits));
    if (mant.empty() || mant == "-") return "0";
    bool neg = mant[0] == '-';
    std::string body = neg ? mant.substr(1) : mant;
    std::string out;
    if (exp10 <= 0) {
        out = "0." + std::string(static_cast<std::size_t>(-exp10), '0') + body;
    } else if (static_cast<std::size_t>(exp10) >= body.size()) {
        out = body + std::string(static_cast<std::size_t>(exp10) - body.size(), '0');
    } else {
        out = body.substr(0, static_cast<std::size_t>(exp10)) + "." + body.substr(static_cast<std::size_t>(exp10));
    }
    return neg ? "-" + out : out;
}

mp_bitcnt_t bits_for_digits(int digits) { return static_cast<mp_bitcnt_t>(digits * 3.3219280948874) + 64; }

}  // namespace

std::vector<mpz_class> max_height_coeffs(int n) {
    if (n < 0) throw std::invalid_argument("dimension must be >= 0");
    std::vector<mpz_class> prev = {1};        // R_0
    if (n == 0) return prev;
    std::vector<mpz_class> cur = {1, 1};      // R_1
    for (int m = 1; m < n; ++m) {
        std::vector<mpz_class> next(cur.size() + 1);
        for (std::size_t j = 0; j < next.size(); ++j) {
            mpz_class acc;
            if (j > 0) acc += cur[j - 1];                  // z R_m
            if (j < cur.size()) acc += 2 * cur[j];         // 2 R_m
            if (j > 0 && j - 1 < prev.size()) acc -= prev[j - 1];  // -z R_{m-1}
            next[j] = acc;
        }
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Poly max_height_charpoly(int n) { return from_ints(max_height_coeffs(n)); }

MaxHeightRecord max_height_record(int n, int precision_digits) {
    if (n < 1) throw std::invalid_argument("dimension must be >= 1");
    MaxHeightRecord r;
    r.n = n;
    auto coeffs = max_height_coeffs(n);
    auto [tau, mu] = peak(coeffs);
    r.tau = tau;
    r.mu = mu;
    r.family_count = 2 * pow3(mu);
    mpz_class fib = fibonacci(2 * static_cast<unsigned long>(n) + 1);
    r.upper_bound = fib;
    r.lower_bound = mpq_class(fib, n + 1);
    r.lower_bound.canonicalize();
    r.c_n = growth_constant(n, precision_digits);
    return r;
}

std::vector<UHTMatrix> max_height_toeplitz_family(int n) {
    if (n < 1) throw std::invalid_argument("dimension must be >= 1");
    auto coeffs = max_height_coeffs(n);
    auto [tau, mu] = peak(coeffs);
    mpz_class tau_sq = tau * tau;

    std::set<std::vector<int>> rows;
    std::vector<int> free_vals = {-1, 0, 1};
    const int fixed = n - mu;
    for (int pattern = 0; pattern < 2; ++pattern) {
        std::vector<int> base(static_cast<std::size_t>(n), -1);
        if (pattern == 1)
            for (int k = 0; k < n; ++k) base[static_cast<std::size_t>(k)] = (k % 2 == 0) ? 1 : -1;
        std::vector<int> idx(static_cast<std::size_t>(mu), 0);
        for (;;) {
            std::vector<int> row = base;
            for (int j = 0; j < mu; ++j)
                row[static_cast<std::size_t>(fixed + j)] = free_vals[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])];
            rows.insert(std::move(row));
            int p = 0;
            while (p < mu && idx[static_cast<std::size_t>(p)] == 2) idx[static_cast<std::size_t>(p++)] = 0;
            if (p == mu) break;
            ++idx[static_cast<std::size_t>(p)];
        }
    }

    std::vector<UHTMatrix> out;
    for (const auto& row : rows) {
        std::vector<GaussInt> t;
        t.reserve(row.size());
        for (int v : row) t.emplace_back(mpz_class(v), mpz_class(0));
        UHTMatrix m(n, std::move(t));
        auto [sq, arg] = poly_max_sqmag(charpoly_toeplitz(m));
        (void)arg;
        if (sq != tau_sq)
            throw std::logic_error("extremal family member failed its height check at n=" + std::to_string(n));
        out.push_back(std::move(m));
    }
    return out;
}

std::vector<std::vector<mpz_class>> max_height_patterns(const std::vector<mpz_class>& f, int n) {
    if (f.size() < 2) throw std::invalid_argument("pattern rule needs at least two set elements");
    if (n < 1) throw std::invalid_argument("dimension must be >= 1");
    mpz_class a = f[0], b = f[0];
    for (const auto& v : f) {
        a = std::min(a, v);
        b = std::max(b, v);
    }
    mpz_class abs_a = abs(a), abs_b = abs(b);
    std::vector<std::vector<mpz_class>> out;
    if (abs_a >= abs_b) out.push_back(std::vector<mpz_class>(static_cast<std::size_t>(n), a));
    if (abs_b >= abs_a) {
        std::vector<mpz_class> alt(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) alt[static_cast<std::size_t>(k)] = (k % 2 == 0) ? b : a;
        out.push_back(std::move(alt));
    }
    return out;
}

// ---------------------------------------------------------------------------

mpz_class coeff_binomial_sum(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("binomial-sum index out of range");
    if (k == n) return 1;
    mpz_class acc = 0, term;
    for (int j = 0; j <= n - k - 1; ++j) {
        mpz_class c1, c2;
        mpz_bin_uiui(c1.get_mpz_t(), static_cast<unsigned long>(k + j), static_cast<unsigned long>(k - 1));
        mpz_bin_uiui(c2.get_mpz_t(), static_cast<unsigned long>(n - k - 1), static_cast<unsigned long>(j));
        acc += c1 * c2;
    }
    return acc;
}

mpz_class coeff_rising_factorial(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("coefficient index out of range");
    if (k == n) return 1;  // monic leading coefficient; the sum form covers k < n
    mpq_class acc = 0;
    mpq_class term = 1;  // m = 0
    for (int m = 0; m <= n - k - 1; ++m) {
        if (m > 0) {
            // extend the rising/falling factorials by one step
            term *= mpq_class(k + 1 + m) * mpq_class(n - k - m);  // (k+2)^{m}, (n-k-1) falling
            term /= mpq_class(m + 1) * mpq_class(m);              // 2^{rising m} = (m+1)!, m!
        }
        acc += term;
    }
    acc *= k + 1;
    acc.canonicalize();
    if (acc.get_den() != 1)
        throw std::domain_error("coefficient sum did not clear to an integer at n=" + std::to_string(n) +
                                ", k=" + std::to_string(k));
    return acc.get_num();
}

std::vector<mpz_class> coeff_series_column(int i, int count) {
    if (i < 0 || count < 1) throw std::invalid_argument("series column needs i >= 0, count >= 1");
    // (1-x)/(1-2x) has coefficients 1, 1, 2, 4, 8, ...
    std::vector<mpz_class> base(static_cast<std::size_t>(count));
    base[0] = 1;
    for (int m = 1; m < count; ++m) base[static_cast<std::size_t>(m)] = mpz_class(1) << (m - 1);
    std::vector<mpz_class> acc = {1};
    acc.resize(static_cast<std::size_t>(count), 0);
    for (int e = 0; e < i + 1; ++e) {
        std::vector<mpz_class> next(static_cast<std::size_t>(count), 0);
        for (int a = 0; a < count; ++a) {
            if (acc[static_cast<std::size_t>(a)] == 0) continue;
            for (int b = 0; a + b < count; ++b)
                next[static_cast<std::size_t>(a + b)] += acc[static_cast<std::size_t>(a)] * base[static_cast<std::size_t>(b)];
        }
        acc = std::move(next);
    }
    return acc;
}

bool series_matches_charpolys(int count) {
    if (count < 1) throw std::invalid_argument("series check needs count >= 1");
    // numerator 1 - x, denominator 1 - (z+2) x + z x^2, coefficients in Z[z]
    using ZPoly = std::vector<mpz_class>;
    auto sub = [](ZPoly& a, const ZPoly& b) {
        if (a.size() < b.size()) a.resize(b.size());
        for (std::size_t j = 0; j < b.size(); ++j) a[j] -= b[j];
    };
    auto mul = [](const ZPoly& a, const ZPoly& b) {
        ZPoly r(a.size() + b.size() - 1);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        return r;
    };
    std::vector<ZPoly> num = {{1}, {-1}};
    std::vector<ZPoly> den = {{1}, {-2, -1}, {0, 1}};
    std::vector<ZPoly> series;
    for (int m = 0; m < count; ++m) {
        ZPoly cm = m < static_cast<int>(num.size()) ? num[static_cast<std::size_t>(m)] : ZPoly{0};
        for (int k = 1; k <= m && k < static_cast<int>(den.size()); ++k)
            sub(cm, mul(den[static_cast<std::size_t>(k)], series[static_cast<std::size_t>(m - k)]));
        // den[0] = 1, so the division step is trivial
        series.push_back(std::move(cm));
    }
    for (int m = 0; m < count; ++m) {
        ZPoly expect = max_height_coeffs(m);
        ZPoly got = series[static_cast<std::size_t>(m)];
        got.resize(expect.size(), 0);
        if (got != expect) return false;
    }
    return true;
}

Poly max_height_charpoly_closed_form(int n) {
    if (n < 0) throw std::invalid_argument("dimension must be >= 0");
    using QPoly = std::vector<mpq_class>;
    auto mul = [](const QPoly& a, const QPoly& b) {
        QPoly r(a.size() + b.size() - 1);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        return r;
    };
    auto add_scaled = [](QPoly& a, const QPoly& b, const mpq_class& s) {
        if (a.size() < b.size()) a.resize(b.size());
        for (std::size_t j = 0; j < b.size(); ++j) a[j] += s * b[j];
    };
    QPoly half_plus_one = {1, mpq_class(1, 2)};            // z/2 + 1
    QPoly one_plus_quarter_sq = {1, 0, mpq_class(1, 4)};   // 1 + z^2/4

    // powers up to what the sums need
    std::vector<QPoly> a_pow = {{1}}, b_pow = {{1}};
    for (int e = 0; e < n; ++e) a_pow.push_back(mul(a_pow.back(), half_plus_one));
    for (int e = 0; e < n / 2; ++e) b_pow.push_back(mul(b_pow.back(), one_plus_quarter_sq));

    QPoly acc = {0};
    mpz_class binom;
    for (int l = 0; 2 * l <= n; ++l) {
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(2 * l));
        add_scaled(acc, mul(a_pow[static_cast<std::size_t>(n - 2 * l)], b_pow[static_cast<std::size_t>(l)]),
                   mpq_class(binom));
    }
    QPoly odd = {0};
    for (int l = 0; 2 * l + 1 <= n; ++l) {
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(2 * l + 1));
        add_scaled(odd, mul(a_pow[static_cast<std::size_t>(n - 2 * l - 1)], b_pow[static_cast<std::size_t>(l)]),
                   mpq_class(binom));
    }
    QPoly half_z = {0, mpq_class(1, 2)};
    add_scaled(acc, mul(half_z, odd), 1);

    acc.resize(static_cast<std::size_t>(n) + 1);
    Poly out;
    out.coeff.reserve(acc.size());
    for (auto& q : acc) {
        q.canonicalize();
        if (q.get_den() != 1)
            throw std::domain_error("closed form left a non-integer coefficient at n=" + std::to_string(n));
        out.coeff.emplace_back(q.get_num(), mpz_class(0));
    }
    return out;
}

// ---------------------------------------------------------------------------

mpz_class fibonacci(unsigned long k) {
    // fast doubling: F(2m) = F(m) (2 F(m+1) - F(m)), F(2m+1) = F(m)^2 + F(m+1)^2
    mpz_class a = 0, b = 1;  // F(0), F(1)
    if (k == 0) return a;
    int bits = 0;
    for (unsigned long t = k; t > 0; t >>= 1) ++bits;
    for (int i = bits - 1; i >= 0; --i) {
        mpz_class c = a * (2 * b - a);
        mpz_class d = a * a + b * b;
        if ((k >> i) & 1) {
            a = d;
            b = c + d;
        } else {
            a = c;
            b = d;
        }
    }
    return a;
}

BoundCheck height_bounds_check(int n) {
    if (n < 1) throw std::invalid_argument("dimension must be >= 1");
    BoundCheck r;
    r.n = n;
    auto coeffs = max_height_coeffs(n);
    r.tau = peak(coeffs).first;
    r.upper = fibonacci(2 * static_cast<unsigned long>(n) + 1);
    r.lower = mpq_class(r.upper, n + 1);
    r.lower.canonicalize();
    mpz_class sum = 0;
    for (const auto& c : coeffs) sum += c;
    r.fib_identity = (sum == r.upper);
    r.strict = (r.lower < mpq_class(r.tau)) && (r.tau < r.upper);
    return r;
}

std::vector<GrowthRow> height_growth_table(int n_max, int precision_digits) {
    if (n_max < 2) throw std::invalid_argument("growth table needs n_max >= 2");
    if (precision_digits < 10) throw std::invalid_argument("precision must be at least 10 digits");
    const mp_bitcnt_t bits = bits_for_digits(precision_digits);
    const mpq_class c_ref(7701532, 10000000);  // reference growth constant

    std::vector<GrowthRow> rows;
    std::vector<mpz_class> prev = {1}, cur = {1, 1};
    mpz_class fa = 1, fb = 2;  // F_2, F_3 at dimension 1
    for (int n = 1; n < n_max; ++n) {
        // advance the polynomial recurrence to degree n+1
        std::vector<mpz_class> next(cur.size() + 1);
        for (std::size_t j = 0; j < next.size(); ++j) {
            mpz_class acc;
            if (j > 0) acc += cur[j - 1];
            if (j < cur.size()) acc += 2 * cur[j];
            if (j > 0 && j - 1 < prev.size()) acc -= prev[j - 1];
            next[j] = acc;
        }
        prev = std::move(cur);
        cur = std::move(next);
        // (F_{2d}, F_{2d+1}) -> (F_{2d+2}, F_{2d+3})
        mpz_class na = fa + fb;
        fb = na + fb;
        fa = std::move(na);

        const int dim = n + 1;
        auto [tau, mu] = peak(cur);

        GrowthRow row;
        row.n = dim;
        row.tau = tau;
        row.mu = mu;
        row.family_count = 2 * pow3(mu);
        row.fib_upper = fb.get_str();

        mpf_class fib(0, bits), tau_f(0, bits), root(0, bits), cn(0, bits), gn(0, bits), sn(0, bits), lower(0, bits);
        fib = mpf_class(fb, bits);
        tau_f = mpf_class(tau, bits);
        root = sqrt(mpf_class(dim + 1, bits));
        lower = fib / (dim + 1);
        cn = tau_f * root / fib;
        gn = mpf_class(mpq_class(c_ref), bits) * fib / root;
        sn = (dim + 1) * (gn / tau_f - 1);
        row.fib_lower = mpf_to_decimal(lower, precision_digits);
        row.c_n = mpf_to_decimal(cn, precision_digits);
        row.s_n = mpf_to_decimal(sn, precision_digits);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string growth_table_csv(const std::vector<GrowthRow>& rows) {
    std::ostringstream os;
    os << "n,tau,mu,count,fib_lower,fib_upper,C_n,s_n\n";
    for (const auto& r : rows)
        os << r.n << "," << r.tau.get_str() << "," << r.mu << "," << r.family_count.get_str() << "," << r.fib_lower
           << "," << r.fib_upper << "," << r.c_n << "," << r.s_n << "\n";
    return os.str();
}

std::string growth_constant(int n, int precision_digits) {
    const mp_bitcnt_t bits = bits_for_digits(precision_digits);
    auto [tau, mu] = peak(max_height_coeffs(n));
    (void)mu;
    mpz_class fib = fibonacci(2 * static_cast<unsigned long>(n) + 1);
    mpf_class cn(0, bits);
    cn = mpf_class(tau, bits) * sqrt(mpf_class(n + 1, bits)) / mpf_class(fib, bits);
    return mpf_to_decimal(cn, precision_digits);
}

}  // namespace bohemian

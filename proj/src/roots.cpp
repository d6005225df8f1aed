#include "bohemian/roots.hpp"

#include <algorithm>
#include <cmath>

namespace bohemian {

namespace {

std::complex<double> to_complex(const GaussInt& g) {
    return {mpz_get_d(g.re.get_mpz_t()), mpz_get_d(g.im.get_mpz_t())};
}

}  // namespace

RootRadius numeric_root_radius(const Poly& p) {
    if (p.degree() < 1) throw std::invalid_argument("root radius needs degree >= 1");

    // roots at the origin come off exactly
    std::size_t zeros = 0;
    while (zeros < p.coeff.size() - 1 && is_zero(p.coeff[zeros])) ++zeros;

    std::vector<std::complex<double>> c;
    for (std::size_t j = zeros; j < p.coeff.size(); ++j) c.push_back(to_complex(p.coeff[j]));
    while (c.size() > 1 && std::abs(c.back()) == 0.0) c.pop_back();
    const int d = static_cast<int>(c.size()) - 1;

    RootRadius r;
    r.roots.assign(zeros, {0.0, 0.0});
    if (d == 0) return r;

    for (auto& ck : c) ck /= c.back();  // monic
    double bound = 0.0;
    for (int j = 0; j < d; ++j) bound = std::max(bound, std::abs(c[static_cast<std::size_t>(j)]));
    bound += 1.0;  // Cauchy: every root has modulus < 1 + max|c_j|

    std::vector<std::complex<double>> z(static_cast<std::size_t>(d));
    const std::complex<double> center = -c[static_cast<std::size_t>(d - 1)] / double(d);
    for (int k = 0; k < d; ++k) {
        double theta = 2.0 * M_PI * k / d + 0.4;
        z[static_cast<std::size_t>(k)] = center + 0.5 * bound * std::polar(1.0, theta);
    }

    auto eval = [&](const std::complex<double>& x, std::complex<double>& val, std::complex<double>& der) {
        val = c[static_cast<std::size_t>(d)];
        der = 0.0;
        for (int j = d - 1; j >= 0; --j) {
            der = der * x + val;
            val = val * x + c[static_cast<std::size_t>(j)];
        }
    };

    const int max_iter = 500;
    const double tol = 1e-13;
    double worst = 0.0;
    int it = 0;
    for (; it < max_iter; ++it) {
        worst = 0.0;
        for (int i = 0; i < d; ++i) {
            std::complex<double> val, der;
            eval(z[static_cast<std::size_t>(i)], val, der);
            if (std::abs(val) == 0.0) continue;
            std::complex<double> w = der == 0.0 ? std::complex<double>(1e-12, 0) : val / der;
            std::complex<double> s = 0.0;
            for (int j = 0; j < d; ++j)
                if (j != i) s += 1.0 / (z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]);
            std::complex<double> corr = w / (1.0 - w * s);
            z[static_cast<std::size_t>(i)] -= corr;
            worst = std::max(worst, std::abs(corr) / (1.0 + std::abs(z[static_cast<std::size_t>(i)])));
        }
        if (worst < tol) break;
    }

    for (const auto& root : z) r.roots.push_back(root);
    for (const auto& root : r.roots) {
        r.max_modulus = std::max(r.max_modulus, std::abs(root));
        r.max_real = std::max(r.max_real, root.real());
    }
    r.iterations = it + 1;
    r.error_bound = std::max(worst, 1e-15 * (1.0 + r.max_modulus));

    if (it == max_iter)
        throw RootSolveError("root iteration did not converge after " + std::to_string(max_iter) + " sweeps", r);
    return r;
}

}  // namespace bohemian

#include "bohemian/compositions.hpp"

#include "bohemian/family.hpp"

#include <algorithm>
#include <sstream>

namespace bohemian {

namespace {

MultiPoly::Key key_with_part(const MultiPoly::Key& key, int part) {
    MultiPoly::Key out = key;
    auto it = std::lower_bound(out.begin(), out.end(), part,
                               [](const std::pair<int, int>& e, int p) { return e.first < p; });
    if (it != out.end() && it->first == part)
        ++it->second;
    else
        out.insert(it, {part, 1});
    return out;
}

}  // namespace

MultiPoly composition_polynomial(int n) {
    if (n < 0) throw std::invalid_argument("composition polynomial needs n >= 0");
    std::vector<MultiPoly> d(static_cast<std::size_t>(n) + 1);
    d[0].terms[{}] = 1;
    for (int m = 1; m <= n; ++m) {
        MultiPoly acc;
        for (int k = 1; k <= m; ++k)
            for (const auto& [key, coeff] : d[static_cast<std::size_t>(m - k)].terms)
                acc.terms[key_with_part(key, k)] += coeff;
        d[static_cast<std::size_t>(m)] = std::move(acc);
    }
    return d[static_cast<std::size_t>(n)];
}

std::vector<std::vector<int>> enumerate_compositions(int n) {
    if (n < 0) throw std::invalid_argument("compositions need n >= 0");
    if (n > 20) throw BudgetExceeded("composition enumeration is capped at n = 20 (2^(n-1) growth)");
    if (n == 0) return {{}};
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // depth-first with ascending first parts gives lexicographic order
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = 1; part <= rest; ++part) {
            cur.push_back(part);
            self(self, rest - part);
            cur.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

MultiPoly aggregate_compositions(const std::vector<std::vector<int>>& comps) {
    MultiPoly acc;
    for (const auto& comp : comps) {
        MultiPoly::Key key;
        for (int part : comp) key = key_with_part(key, part);
        acc.terms[key] += 1;
    }
    return acc;
}

GaussInt charpoly_from_compositions(const std::vector<GaussInt>& t, const GaussInt& z) {
    const int n = static_cast<int>(t.size());
    std::vector<GaussInt> shifted(t.size());
    for (int k = 1; k <= n; ++k) {
        // bridge to the subdiagonal -1 convention
        shifted[static_cast<std::size_t>(k - 1)] =
            (k % 2 == 1) ? t[static_cast<std::size_t>(k - 1)] : -t[static_cast<std::size_t>(k - 1)];
    }
    if (n > 0) shifted[0] = shifted[0] - z;
    std::vector<GaussInt> d(static_cast<std::size_t>(n) + 1);
    d[0] = GaussInt(1);
    for (int m = 1; m <= n; ++m) {
        GaussInt acc(0);
        for (int k = 1; k <= m; ++k) acc += shifted[static_cast<std::size_t>(k - 1)] * d[static_cast<std::size_t>(m - k)];
        d[static_cast<std::size_t>(m)] = acc;
    }
    return d[static_cast<std::size_t>(n)];
}

std::string multipoly_to_string(const MultiPoly& p) {
    if (p.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, coeff] : p.terms) {
        if (!first) os << " + ";
        first = false;
        if (coeff != 1 || key.empty()) os << coeff.get_str();
        for (const auto& [part, mult] : key) {
            os << "t" << part;
            if (mult > 1) os << "^" << mult;
        }
    }
    return os.str();
}

}  // namespace bohemian

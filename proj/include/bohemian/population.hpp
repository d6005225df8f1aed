#pragma once

// The finite entry set a matrix family draws from.

#include "bohemian/gaussint.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace bohemian {

struct Population {
    std::vector<GaussInt> elements;  // distinct, in declaration order
    std::string name;

    Population() = default;
    Population(std::vector<GaussInt> elems, std::string label) : elements(std::move(elems)), name(std::move(label)) {
        for (std::size_t i = 0; i < elements.size(); ++i)
            for (std::size_t j = i + 1; j < elements.size(); ++j)
                if (elements[i] == elements[j])
                    throw std::invalid_argument("population elements must be distinct: " + name);
        if (elements.empty()) throw std::invalid_argument("population must be nonempty");
    }

    std::size_t size() const { return elements.size(); }

    bool contains(const GaussInt& g) const {
        return std::find(elements.begin(), elements.end(), g) != elements.end();
    }

    bool all_real() const {
        for (const auto& e : elements)
            if (e.im != 0) return false;
        return true;
    }

    mpz_class max_sqmag() const {
        mpz_class best = 0;
        for (const auto& e : elements) best = std::max(best, sqmag(e));
        return best;
    }

    // closed under multiplication by i^q and -i^q
    bool invariant_under(SubdiagAngle a) const {
        for (const auto& e : elements) {
            if (!contains(apply_quarter_turns(e, a.quarter_turns))) return false;
            if (!contains(apply_quarter_turns(e, a.negated().quarter_turns))) return false;
        }
        return true;
    }

    friend bool operator==(const Population& a, const Population& b) { return a.elements == b.elements; }
};

inline Population pop_pm1_0() { return Population({GaussInt(-1), GaussInt(0), GaussInt(1)}, "-1,0,1"); }
inline Population pop_01() { return Population({GaussInt(0), GaussInt(1)}, "0,1"); }
inline Population pop_pm1() { return Population({GaussInt(-1), GaussInt(1)}, "-1,1"); }
inline Population pop_0i() {
    return Population({GaussInt(0), gauss_i(), -gauss_i()}, "0,i,-i");
}
inline Population pop_gauss_units() {
    return Population({GaussInt(0), GaussInt(1), gauss_i(), GaussInt(-1), -gauss_i()}, "0,1,i,-1,-i");
}

// Parses one population entry: decimal integer with optional trailing 'i'
// ("-1", "0", "2", "i", "-i", "3i").
inline GaussInt parse_entry_token(const std::string& tok) {
    if (tok.empty()) throw std::invalid_argument("empty population entry");
    if (tok.back() == 'i') {
        std::string body = tok.substr(0, tok.size() - 1);
        if (body.empty() || body == "+") body = "1";
        else if (body == "-") body = "-1";
        return {mpz_class(0), mpz_class(body)};
    }
    return {mpz_class(tok), mpz_class(0)};
}

inline Population parse_population(const std::string& spec) {
    std::vector<GaussInt> elems;
    std::string tok;
    for (char ch : spec) {
        if (ch == ',') {
            if (!tok.empty()) elems.push_back(parse_entry_token(tok));
            tok.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            tok += ch;
        }
    }
    if (!tok.empty()) elems.push_back(parse_entry_token(tok));
    return Population(std::move(elems), spec);
}

}  // namespace bohemian

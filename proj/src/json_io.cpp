#include "bohemian/json_io.hpp"

#include <nlohmann/json.hpp>

#include <cctype>

namespace bohemian {

using nlohmann::json;
using nlohmann::ordered_json;

GaussInt parse_entry_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty matrix entry");
    // split "a+bi" / "a-bi" at the sign that separates the two parts
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < s.size(); ++i)
        if ((s[i] == '+' || s[i] == '-') && std::isdigit(static_cast<unsigned char>(s[i - 1]))) split = i;
    try {
        if (s.back() == 'i') {
            std::string re = "0", im;
            if (split == std::string::npos) {
                im = s.substr(0, s.size() - 1);
            } else {
                re = s.substr(0, split);
                im = s.substr(split, s.size() - split - 1);
            }
            if (im.empty() || im == "+") im = "1";
            if (im == "-") im = "-1";
            return {mpz_class(re), mpz_class(im)};
        }
        if (split != std::string::npos) throw std::invalid_argument("entry");
        return {mpz_class(s), mpz_class(0)};
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed matrix entry: \"" + s + "\"");
    }
}

GaussInt entry_from_json(const json& j) {
    if (j.is_number_integer()) return {mpz_class(static_cast<long>(j.get<std::int64_t>())), mpz_class(0)};
    if (j.is_string()) return parse_entry_string(j.get<std::string>());
    throw std::invalid_argument("matrix entry must be an integer or an \"a+bi\" string");
}

ordered_json entry_to_json(const GaussInt& g) {
    static const mpz_class kJsonSafe("9007199254740991");  // 2^53 - 1
    if (g.im == 0 && abs(g.re) <= kJsonSafe) return ordered_json(static_cast<std::int64_t>(g.re.get_si()));
    return ordered_json(to_entry_string(g));
}

namespace {

std::vector<GaussInt> entries_from_json(const json& arr, const char* what) {
    if (!arr.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
    std::vector<GaussInt> out;
    out.reserve(arr.size());
    for (const auto& e : arr) out.push_back(entry_from_json(e));
    return out;
}

std::vector<SubdiagAngle> subdiag_from_json(const json& j, int expected) {
    std::vector<SubdiagAngle> out;
    if (j.is_number_integer()) {
        out.assign(static_cast<std::size_t>(expected), SubdiagAngle(j.get<int>()));
        return out;
    }
    if (!j.is_array()) throw std::invalid_argument("subdiag must be an integer or an array of 0..3");
    for (const auto& e : j) out.push_back(SubdiagAngle(e.get<int>()));
    if (out.size() == 1 && expected > 1) out.assign(static_cast<std::size_t>(expected), out[0]);
    if (out.size() != static_cast<std::size_t>(expected))
        throw std::invalid_argument("subdiag must list " + std::to_string(expected) + " angles");
    return out;
}

}  // namespace

MatrixVariant matrix_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("matrix JSON must be an object");
    if (!j.contains("n") || !j.at("n").is_number_integer()) throw std::invalid_argument("matrix JSON needs integer n");
    const int n = j.at("n").get<int>();
    if (n < 1) throw std::invalid_argument("matrix dimension must be >= 1");
    const std::string shape = j.value("shape", std::string());

    if (shape == "uh") {
        auto upper = entries_from_json(j.at("upper"), "upper");
        std::vector<SubdiagAngle> sub(static_cast<std::size_t>(n - 1), SubdiagAngle(0));
        if (j.contains("subdiag")) sub = subdiag_from_json(j.at("subdiag"), n - 1);
        return UHMatrix(n, std::move(upper), std::move(sub));
    }
    if (shape == "uht") {
        auto t = entries_from_json(j.at("t"), "t");
        SubdiagAngle angle(0);
        if (j.contains("subdiag")) {
            const auto& sd = j.at("subdiag");
            if (sd.is_array()) {
                if (sd.size() != 1) throw std::invalid_argument("uht subdiag takes a single angle");
                angle = SubdiagAngle(sd.at(0).get<int>());
            } else {
                angle = SubdiagAngle(sd.get<int>());
            }
        }
        return UHTMatrix(n, std::move(t), angle);
    }
    if (shape == "full") {
        auto entries = entries_from_json(j.at("entries"), "entries");
        if (entries.size() != static_cast<std::size_t>(n) * n)
            throw std::invalid_argument("full matrix needs n*n entries");
        GMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int c = 0; c < n; ++c) m(i, c) = entries[static_cast<std::size_t>(i) * n + c];
        return m;
    }
    throw std::invalid_argument("shape must be one of \"uh\", \"uht\", \"full\"");
}

ordered_json matrix_to_json(const MatrixVariant& mv) {
    ordered_json j;
    if (const auto* uh = std::get_if<UHMatrix>(&mv)) {
        j["n"] = uh->n;
        j["shape"] = "uh";
        ordered_json upper = ordered_json::array();
        for (const auto& e : uh->upper) upper.push_back(entry_to_json(e));
        j["upper"] = std::move(upper);
        ordered_json sub = ordered_json::array();
        for (const auto& s : uh->subdiag) sub.push_back(int(s.quarter_turns));
        j["subdiag"] = std::move(sub);
    } else if (const auto* uht = std::get_if<UHTMatrix>(&mv)) {
        j["n"] = uht->n;
        j["shape"] = "uht";
        ordered_json t = ordered_json::array();
        for (const auto& e : uht->first_row) t.push_back(entry_to_json(e));
        j["t"] = std::move(t);
        j["subdiag"] = ordered_json::array({int(uht->subdiag.quarter_turns)});
    } else {
        const auto& m = std::get<GMatrix>(mv);
        j["n"] = static_cast<int>(m.rows());
        j["shape"] = "full";
        ordered_json entries = ordered_json::array();
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            for (Eigen::Index c = 0; c < m.cols(); ++c) entries.push_back(entry_to_json(m(i, c)));
        j["entries"] = std::move(entries);
    }
    return j;
}

Poly poly_from_json(const json& j) {
    if (!j.is_object() || !j.contains("coeffs")) throw std::invalid_argument("poly JSON needs a coeffs array");
    Poly p;
    p.coeff = entries_from_json(j.at("coeffs"), "coeffs");
    if (p.coeff.empty()) throw std::invalid_argument("poly JSON must not be empty");
    return p;
}

ordered_json poly_to_json(const Poly& p) {
    ordered_json j;
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : p.coeff) coeffs.push_back(entry_to_json(c));
    j["coeffs"] = std::move(coeffs);
    return j;
}

}  // namespace bohemian

// bohemian: exact computations over bounded-entry upper Hessenberg and
// Toeplitz matrix families.
//
// Exit codes: 0 success, 2 input error, 3 verification mismatch, 4 budget
// exceeded.  Stdout carries the machine-readable result and is
// deterministic for a given flag set; progress and timing go to stderr.

#include "bohemian/charpoly.hpp"
#include "bohemian/classify.hpp"
#include "bohemian/compositions.hpp"
#include "bohemian/enumerate.hpp"
#include "bohemian/json_io.hpp"
#include "bohemian/maxheight.hpp"
#include "bohemian/roots.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using bohemian::BudgetExceeded;
using nlohmann::ordered_json;

struct VerifyMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

mpz_class default_budget() {
    if (const char* env = std::getenv("BOHEMIAN_BUDGET")) return mpz_class(env);
    return mpz_class(1000000000);
}

struct FamilyFlags {
    std::string family = "uh";
    int n = 0;
    std::string pop = "-1,0,1";
    bool zero_diagonal = false;
    std::vector<int> subdiag;
    std::string budget_str;
    bool long_run = false;

    void attach(CLI::App* cmd, bool with_budget = true) {
        cmd->add_option("--family", family, "family shape: full, uh, uht, or zh (zero-diagonal uh)");
        cmd->add_option("--n", n, "matrix dimension")->required();
        cmd->add_option("--pop", pop, "population entries, e.g. -1,0,1 or 0,i,-i");
        cmd->add_flag("--zero-diagonal", zero_diagonal, "pin the main diagonal at 0");
        cmd->add_option("--subdiag", subdiag, "subdiagonal angles in quarter turns (0..3)")->delimiter(',');
        if (with_budget) {
            cmd->add_option("--budget", budget_str, "exhaustive cap on family size (default 1e9 or $BOHEMIAN_BUDGET)");
            cmd->add_flag("--long-run", long_run, "lift the exhaustive budget cap");
        }
    }

    bohemian::FamilySpec spec() const {
        bohemian::FamilySpec f;
        if (family == "full")
            f.shape = bohemian::Shape::full;
        else if (family == "uh" || family == "zh")
            f.shape = bohemian::Shape::upper_hessenberg;
        else if (family == "uht")
            f.shape = bohemian::Shape::uh_toeplitz;
        else
            throw std::invalid_argument("unknown family: " + family);
        f.n = n;
        f.population = bohemian::parse_population(pop);
        f.zero_diagonal = zero_diagonal || family == "zh";
        for (int q : subdiag) f.subdiag.emplace_back(q);
        return f;
    }

    mpz_class budget() const {
        if (long_run) return (mpz_class(1) << 64) - 1;
        if (!budget_str.empty()) return mpz_class(budget_str);
        return default_budget();
    }
};

ordered_json family_json(const bohemian::FamilySpec& f) {
    ordered_json j;
    j["shape"] = bohemian::shape_name(f.shape);
    j["n"] = f.n;
    ordered_json pop = ordered_json::array();
    for (const auto& e : f.population.elements) pop.push_back(bohemian::entry_to_json(e));
    j["population"] = std::move(pop);
    j["zero_diagonal"] = f.zero_diagonal;
    if (!f.subdiag.empty()) {
        ordered_json sub = ordered_json::array();
        for (auto s : f.subdiag) sub.push_back(int(s.quarter_turns));
        j["subdiag"] = std::move(sub);
    }
    return j;
}

ordered_json magnitude_json(const bohemian::Magnitude& m) {
    ordered_json j;
    j["sq"] = bohemian::entry_to_json(bohemian::GaussInt(m.sq));
    j["is_integer"] = m.integral;
    if (m.integral)
        j["value"] = bohemian::entry_to_json(bohemian::GaussInt(m.value));
    else
        j["value_approx"] = std::sqrt(mpz_get_d(m.sq.get_mpz_t()));
    return j;
}

std::function<void(std::uint64_t, std::uint64_t)> progress_printer(std::uint64_t threshold = 2000000) {
    return [threshold](std::uint64_t done, std::uint64_t total) {
        if (total < threshold) return;
        std::cerr << "\rprocessed " << done << " / " << total << " (" << (100 * done / total) << "%)"
                  << (done == total ? "\n" : "") << std::flush;
    };
}

int cmd_charpoly(const std::string& file, bool oracle) {
    std::string text;
    if (file.empty() || file == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(file);
        if (!in) throw std::invalid_argument("cannot open " + file);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    nlohmann::json parsed;
    try {
        parsed = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
    bohemian::MatrixVariant mv = bohemian::matrix_from_json(parsed);

    bohemian::Poly cp;
    if (const auto* uh = std::get_if<bohemian::UHMatrix>(&mv))
        cp = bohemian::charpoly_hessenberg(*uh);
    else if (const auto* uht = std::get_if<bohemian::UHTMatrix>(&mv))
        cp = bohemian::charpoly_toeplitz(*uht);
    else
        cp = bohemian::charpoly_bareiss(std::get<bohemian::GMatrix>(mv));

    if (oracle) {
        bohemian::GMatrix dense;
        if (const auto* uh = std::get_if<bohemian::UHMatrix>(&mv))
            dense = uh->expand();
        else if (const auto* uht = std::get_if<bohemian::UHTMatrix>(&mv))
            dense = uht->expand();
        else
            dense = std::get<bohemian::GMatrix>(mv);
        bohemian::Poly check = bohemian::charpoly_bareiss(dense);
        if (!(check == cp))
            throw VerifyMismatch("elimination oracle disagrees with the recurrence: " +
                                 to_entry_string(check) + " vs " + to_entry_string(cp));
    }

    bohemian::CharpolyResult res = bohemian::make_charpoly_result(std::move(cp));
    ordered_json out = bohemian::poly_to_json(res.poly);
    out["height"] = magnitude_json(res.height.height);
    ordered_json attain = ordered_json::array();
    for (int j : res.height.attaining) attain.push_back(j);
    out["attaining"] = std::move(attain);
    out["mu"] = res.mu;
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_enumerate(const FamilyFlags& fam, const std::string& predicates, int jobs, int partitions, bool distinct) {
    bohemian::EnumerationPlan plan;
    plan.family = fam.spec();
    std::stringstream ss(predicates);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) plan.predicates.push_back(bohemian::parse_predicate(tok));
    plan.count_distinct = distinct;
    plan.jobs = jobs;
    plan.partitions = partitions;
    plan.budget = fam.budget();
    plan.progress = progress_printer();

    bohemian::ClassCounts counts = bohemian::enumerate(plan);

    ordered_json out;
    out["family"] = family_json(plan.family);
    out["total"] = counts.total;
    ordered_json per;
    for (auto p : plan.predicates) per[bohemian::predicate_name(p)] = counts.count(p);
    out["counts"] = std::move(per);
    if (counts.tracked_max_height) out["max_char_height"] = magnitude_json(counts.max_char_height);
    if (counts.distinct_charpolys) out["distinct_charpolys"] = *counts.distinct_charpolys;
    out["seed"] = nullptr;
    std::cout << out.dump() << "\n";
    std::cerr << "elapsed_s " << counts.elapsed_s << "\n";
    return 0;
}

int cmd_sample(const FamilyFlags& fam, const std::string& predicate, std::uint64_t samples, std::uint64_t seed,
               int jobs) {
    bohemian::EnumerationPlan plan;
    plan.family = fam.spec();
    if (!predicate.empty()) plan.predicates.push_back(bohemian::parse_predicate(predicate));
    plan.sample = bohemian::EnumerationPlan::Sampled{samples, seed};
    plan.jobs = jobs;
    plan.progress = progress_printer();
    bohemian::ClassCounts counts = bohemian::enumerate(plan);

    ordered_json out;
    out["family"] = family_json(plan.family);
    out["samples"] = counts.total;
    out["seed"] = seed;
    if (!predicate.empty()) {
        std::uint64_t k = counts.count(bohemian::parse_predicate(predicate));
        out["predicate"] = predicate;
        out["count"] = k;
        if (samples > 0) {
            double f = double(k) / double(samples);
            double half = 1.959963985 * std::sqrt(std::max(f * (1.0 - f), 0.0) / double(samples));
            out["fraction"] = f;
            out["ci95"] = ordered_json::array({std::max(0.0, f - half), std::min(1.0, f + half)});
        }
    }
    std::cout << out.dump() << "\n";
    std::cerr << "elapsed_s " << counts.elapsed_s << "\n";
    return 0;
}

int cmd_maxheight(int n_max, int precision, const std::string& csv_path) {
    auto rows = bohemian::height_growth_table(n_max, precision);
    std::string csv = bohemian::growth_table_csv(rows);
    if (csv_path.empty() || csv_path == "-") {
        std::cout << csv;
    } else {
        std::ofstream out(csv_path);
        if (!out) throw std::invalid_argument("cannot open " + csv_path);
        out << csv;
    }
    return 0;
}

int cmd_identities(int n_max) {
    bool all_ok = true;
    auto report = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
        all_ok = all_ok && ok;
    };

    bool binom = true, rising = true, column = true, closed = true;
    for (int n = 0; n <= n_max; ++n) {
        auto coeffs = bohemian::max_height_coeffs(n);
        for (int k = 0; k <= n; ++k) {
            const mpz_class& expect = coeffs[static_cast<std::size_t>(k)];
            binom = binom && bohemian::coeff_binomial_sum(n + 1, k + 1) == expect;
            rising = rising && bohemian::coeff_rising_factorial(n, k) == expect;
        }
        closed = closed && bohemian::max_height_charpoly_closed_form(n) == bohemian::max_height_charpoly(n);
    }
    for (int i = 0; i <= std::min(n_max, 12); ++i) {
        auto col = bohemian::coeff_series_column(i, n_max + 1 - i);
        for (int m = 0; m + i <= n_max; ++m)
            column = column &&
                     col[static_cast<std::size_t>(m)] ==
                         bohemian::max_height_coeffs(i + m)[static_cast<std::size_t>(i)];
    }
    report("binomial-sum coefficients (T)", binom);
    report("rising-factorial coefficients", rising);
    report("generating-function columns", column);
    report("ordinary generating function", bohemian::series_matches_charpolys(n_max + 1));
    report("closed-form evaluation", closed);
    if (!all_ok) throw VerifyMismatch("coefficient identity mismatch");
    return 0;
}

int cmd_compositions(int n, bool check) {
    bohemian::MultiPoly p = bohemian::composition_polynomial(n);
    if (check) {
        if (!(bohemian::aggregate_compositions(bohemian::enumerate_compositions(n)) == p))
            throw VerifyMismatch("composition enumeration disagrees with the recurrence");
    }
    ordered_json terms = ordered_json::array();
    for (const auto& [key, coeff] : p.terms) {
        ordered_json term;
        ordered_json parts;
        for (auto [part, mult] : key) parts[std::to_string(part)] = mult;
        term["parts"] = std::move(parts);
        term["coeff"] = bohemian::entry_to_json(bohemian::GaussInt(coeff));
        terms.push_back(std::move(term));
    }
    ordered_json out;
    out["n"] = n;
    out["terms"] = std::move(terms);
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_db_export(const FamilyFlags& fam, const std::string& out_path, int jobs) {
    auto records = bohemian::charpoly_database(fam.spec(), fam.budget(), jobs);
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out_path.empty() && out_path != "-") {
        file.open(out_path);
        if (!file) throw std::invalid_argument("cannot open " + out_path);
        os = &file;
    }
    for (const auto& r : records) {
        ordered_json line = bohemian::poly_to_json(r.coeffs);
        line["height"] = magnitude_json(r.height.height);
        line["mu"] = r.mu;
        line["matrix_count"] = r.matrix_count;
        line["example_matrix_index"] = r.example_matrix_index;
        (*os) << line.dump() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Bohemian upper Hessenberg / Toeplitz matrix toolkit"};
    app.require_subcommand(1);

    auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial of one matrix (JSON)");
    std::string cp_file;
    bool cp_oracle = false;
    charpoly->add_option("--file", cp_file, "matrix JSON file (default: stdin)");
    charpoly->add_flag("--oracle", cp_oracle, "cross-check against fraction-free elimination");

    auto* enumerate = app.add_subcommand("enumerate", "exhaustive classification counts over a family");
    FamilyFlags enum_fam;
    enum_fam.attach(enumerate);
    std::string predicates;
    int jobs = 0, partitions = 0;
    bool distinct = false;
    enumerate->add_option("--predicates", predicates, "comma-separated classifier list")->required();
    enumerate->add_option("--jobs", jobs, "worker threads (default: hardware)");
    enumerate->add_option("--partitions", partitions, "index-space shards (default: jobs)");
    enumerate->add_flag("--distinct", distinct, "also count distinct characteristic polynomials");

    auto* sample = app.add_subcommand("sample", "seeded Monte Carlo estimate over a family");
    FamilyFlags sample_fam;
    sample_fam.family = "full";
    sample_fam.attach(sample, false);
    std::string predicate = "singular";
    std::uint64_t samples = 0, seed = 0;
    sample->add_option("--predicate", predicate, "classifier to estimate (default singular)");
    sample->add_option("--samples", samples, "number of draws")->required();
    sample->add_option("--seed", seed, "stream seed (default 0)");
    sample->add_option("--jobs", jobs, "worker threads");

    auto* maxheight = app.add_subcommand("maxheight", "extremal-height table and growth constants (CSV)");
    int n_max = 10, precision = 50;
    std::string csv_path;
    maxheight->add_option("--n-max", n_max, "largest dimension (>= 2)")->required();
    maxheight->add_option("--precision", precision, "decimal digits for C_n and s_n (default 50)");
    maxheight->add_option("--csv", csv_path, "output file (default: stdout)");

    auto* identities = app.add_subcommand("identities", "verify all coefficient identities");
    int id_n_max = 30;
    identities->add_option("--n-max", id_n_max, "sweep bound (default 30)");

    auto* compositions = app.add_subcommand("compositions", "symbolic constant-term polynomial (JSON)");
    int comp_n = 0;
    bool comp_check = false;
    compositions->add_option("--n", comp_n, "composition size")->required();
    compositions->add_flag("--check", comp_check, "cross-check against explicit enumeration (n <= 20)");

    auto* db = app.add_subcommand("db-export", "one JSONL record per distinct characteristic polynomial");
    FamilyFlags db_fam;
    db_fam.attach(db);
    std::string out_path;
    db->add_option("--out", out_path, "output file (default: stdout)");
    db->add_option("--jobs", jobs, "worker threads");

    try {
        app.parse(argc, argv);
        if (charpoly->parsed()) return cmd_charpoly(cp_file, cp_oracle);
        if (enumerate->parsed()) return cmd_enumerate(enum_fam, predicates, jobs, partitions, distinct);
        if (sample->parsed()) return cmd_sample(sample_fam, predicate, samples, seed, jobs);
        if (maxheight->parsed()) return cmd_maxheight(n_max, precision, csv_path);
        if (identities->parsed()) return cmd_identities(id_n_max);
        if (compositions->parsed()) return cmd_compositions(comp_n, comp_check);
        if (db->parsed()) return cmd_db_export(db_fam, out_path, jobs);
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\nhint: rerun with --long-run to lift the cap\n";
        return 4;
    } catch (const VerifyMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const bohemian::RootSolveError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

#pragma once

// Exhaustive and sampled iteration over matrix families with exact
// classifiers and parallel-mergeable counting.
//
// Concurrency model: the index space is cut into shards, each shard runs a
// pure fold into its own accumulator, and accumulators merge associatively
// in shard order.  Nothing is shared but the final merge, so counts are
// identical for any shard/thread combination.

#include "bohemian/charpoly.hpp"
#include "bohemian/classify.hpp"
#include "bohemian/family.hpp"
#include "bohemian/poly.hpp"
#include "bohemian/rng.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace bohemian {

enum class Predicate : int {
    singular = 0,
    normal,
    nilpotent,
    type1_stable,
    type2_stable,
    nonderogatory,
    max_char_height,
};

constexpr int kPredicateCount = 7;

inline const char* predicate_name(Predicate p) {
    switch (p) {
        case Predicate::singular: return "singular";
        case Predicate::normal: return "normal";
        case Predicate::nilpotent: return "nilpotent";
        case Predicate::type1_stable: return "type1_stable";
        case Predicate::type2_stable: return "type2_stable";
        case Predicate::nonderogatory: return "nonderogatory";
        default: return "max_char_height_attained";
    }
}

Predicate parse_predicate(const std::string& name);

struct EnumerationPlan {
    FamilySpec family;
    std::vector<Predicate> predicates;
    bool count_distinct = false;

    // sampled mode: draw `samples` members i.i.d. uniform from the family
    struct Sampled {
        std::uint64_t samples = 0;
        std::uint64_t seed = 0;
    };
    std::optional<Sampled> sample;

    int jobs = 0;        // worker threads; 0 = hardware concurrency
    int partitions = 0;  // index-space shards; 0 = jobs
    mpz_class budget = mpz_class(1000000000);  // exhaustive-mode cap
    std::function<void(std::uint64_t done, std::uint64_t total)> progress;  // optional, throttled
};

struct ClassCounts {
    std::uint64_t total = 0;
    std::array<std::uint64_t, kPredicateCount> counts{};  // indexed by Predicate
    bool tracked_max_height = false;
    Magnitude max_char_height;                 // family maximum when tracked
    std::uint64_t max_char_height_count = 0;   // members attaining it
    std::optional<std::uint64_t> distinct_charpolys;
    double elapsed_s = 0.0;

    std::uint64_t count(Predicate p) const { return counts[static_cast<std::size_t>(static_cast<int>(p))]; }
};

ClassCounts enumerate(const EnumerationPlan& plan);

std::uint64_t distinct_charpolys(const FamilySpec& family, const mpz_class& budget = mpz_class(1000000000),
                                 int jobs = 0);

struct DbRecord {
    Poly coeffs;
    HeightInfo height;
    int mu = 0;
    std::uint64_t matrix_count = 0;
    std::uint64_t example_matrix_index = 0;
};

// one record per distinct characteristic polynomial, sorted by coefficient
// vector (lexicographic over (re, im) pairs)
std::vector<DbRecord> charpoly_database(const FamilySpec& family, const mpz_class& budget = mpz_class(1000000000),
                                        int jobs = 0);

// ---------------------------------------------------------------------------
// templated kernel, instantiated per backend by the driver

namespace detail {

struct PredicateFlags {
    bool want[kPredicateCount] = {};
    bool distinct = false;
    bool database = false;

    bool needs_charpoly() const {
        return want[int(Predicate::type1_stable)] || want[int(Predicate::type2_stable)] ||
               want[int(Predicate::max_char_height)] || distinct || database;
    }
    bool needs_det() const { return want[int(Predicate::singular)]; }
};

struct DbLocalRecord {
    Poly coeffs;
    std::uint64_t count = 0;
    std::uint64_t first_index = 0;
};

template <class Scalar>
struct ShardAccum {
    using Sq = decltype(sqmag(std::declval<Scalar>()));

    std::uint64_t total = 0;
    std::array<std::uint64_t, kPredicateCount> counts{};
    Sq max_sq = Sq(0);
    std::uint64_t max_count = 0;
    std::unordered_set<std::string> distinct;
    std::unordered_map<std::string, DbLocalRecord> database;
};

template <class Scalar>
void eval_member(const FamilySpec& fam, MemberState<Scalar>& st, const PredicateFlags& flags,
                 ShardAccum<Scalar>& acc, std::vector<Scalar>& det_scratch, std::uint64_t index) {
    ++acc.total;

    Polynomial<Scalar> cp;
    if (flags.needs_charpoly()) {
        switch (fam.shape) {
            case Shape::uh_toeplitz: cp = charpoly_toeplitz(st.toeplitz); break;
            case Shape::upper_hessenberg: cp = charpoly_hessenberg_coeffwise(st.hess); break;
            default: cp = charpoly_bareiss(st.dense); break;
        }
    }

    if (flags.needs_det()) {
        const int n = fam.n;
        det_scratch.assign(st.dense.data(), st.dense.data() + static_cast<std::size_t>(n) * n);
        // Eigen stores column-major; a transpose leaves the determinant unchanged
        if (is_zero(det_bareiss_inplace(det_scratch, n))) ++acc.counts[int(Predicate::singular)];
    }
    if (flags.want[int(Predicate::normal)] && is_normal(st.dense)) ++acc.counts[int(Predicate::normal)];
    if (flags.want[int(Predicate::nilpotent)] && is_nilpotent(st.dense)) ++acc.counts[int(Predicate::nilpotent)];
    if (flags.want[int(Predicate::type1_stable)] && routh_strictly_stable(real_coefficients(cp)))
        ++acc.counts[int(Predicate::type1_stable)];
    if (flags.want[int(Predicate::type2_stable)] && is_type2_stable_charpoly(cp))
        ++acc.counts[int(Predicate::type2_stable)];
    if (flags.want[int(Predicate::nonderogatory)]) {
        bool ok = fam.shape == Shape::uh_toeplitz ? is_nonderogatory(st.toeplitz.expand_hessenberg())
                                                  : is_nonderogatory(st.hess);
        if (ok) ++acc.counts[int(Predicate::nonderogatory)];
    }
    if (flags.want[int(Predicate::max_char_height)]) {
        auto [sq, arg] = poly_max_sqmag(cp);
        (void)arg;
        if (acc.max_count == 0 || sq > acc.max_sq) {
            acc.max_sq = sq;
            acc.max_count = 1;
        } else if (sq == acc.max_sq) {
            ++acc.max_count;
        }
    }
    if (flags.distinct || flags.database) {
        std::string key = to_entry_string(cp);
        if (flags.distinct) acc.distinct.insert(key);
        if (flags.database) {
            auto it = acc.database.find(key);
            if (it == acc.database.end()) {
                DbLocalRecord rec;
                rec.coeffs.coeff.reserve(cp.coeff.size());
                for (const auto& c : cp.coeff) rec.coeffs.coeff.push_back(gauss_promote(c));
                rec.count = 1;
                rec.first_index = index;
                acc.database.emplace(std::move(key), std::move(rec));
            } else {
                ++it->second.count;
                it->second.first_index = std::min(it->second.first_index, index);
            }
        }
    }
}

template <class Scalar>
ShardAccum<Scalar> run_exhaustive_range(const FamilySpec& fam, const PredicateFlags& flags, std::uint64_t begin,
                                        std::uint64_t end, const std::function<void(std::uint64_t)>& tick) {
    ShardAccum<Scalar> acc;
    MemberState<Scalar> st(fam);
    st.decode(begin);
    std::vector<Scalar> det_scratch;
    std::uint64_t since_tick = 0;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
        if (idx != begin) st.step();
        eval_member(fam, st, flags, acc, det_scratch, idx);
        if (tick && ++since_tick == 65536) {
            tick(since_tick);
            since_tick = 0;
        }
    }
    if (tick && since_tick) tick(since_tick);
    return acc;
}

template <class Scalar>
ShardAccum<Scalar> run_sampled_range(const FamilySpec& fam, const PredicateFlags& flags, std::uint64_t seed,
                                     std::uint64_t begin, std::uint64_t end,
                                     const std::function<void(std::uint64_t)>& tick) {
    ShardAccum<Scalar> acc;
    MemberState<Scalar> st(fam);
    std::vector<Scalar> det_scratch;
    const std::uint64_t base = fam.population.size();
    std::uint64_t since_tick = 0;
    for (std::uint64_t s = begin; s < end; ++s) {
        SampleStream stream(seed, s);
        for (std::size_t p = 0; p < st.digits.size(); ++p)
            st.apply(p, static_cast<std::uint8_t>(stream.next_below(base)));
        eval_member(fam, st, flags, acc, det_scratch, s);
        if (tick && ++since_tick == 4096) {
            tick(since_tick);
            since_tick = 0;
        }
    }
    if (tick && since_tick) tick(since_tick);
    return acc;
}

}  // namespace detail

}  // namespace bohemian

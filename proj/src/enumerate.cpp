#include "bohemian/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

namespace bohemian {

namespace {

using detail::PredicateFlags;
using detail::ShardAccum;

enum class Backend { real64, gauss64, exact };

Backend choose_backend(const FamilySpec& fam, const PredicateFlags& flags) {
    const double h2 = mpz_get_d(fam.population.max_sqmag().get_mpz_t());
    const int n = fam.n;
    if (h2 > 1e12) return Backend::exact;

    bool fits = true;
    if (flags.needs_det()) fits = fits && bounds::det_fits_int64(n, h2);
    if (flags.want[int(Predicate::normal)]) fits = fits && bounds::det_fits_int64(n, h2);
    if (flags.want[int(Predicate::nilpotent)]) fits = fits && bounds::power_fits_int64(n, h2);
    if (flags.want[int(Predicate::nonderogatory)]) fits = fits && bounds::krylov_fits_int64(n, h2);
    if (flags.needs_charpoly()) {
        fits = fits && (fam.shape == Shape::full ? bounds::charpoly_bareiss_fits_int64(n, h2)
                                                 : bounds::charpoly_recurrence_fits_int64(n, h2));
        if (flags.want[int(Predicate::type1_stable)])
            fits = fits && bounds::charpoly_recurrence_fits_int64(n, h2);
    }
    if (!fits) return Backend::exact;
    return fam.real_valued() ? Backend::real64 : Backend::gauss64;
}

struct MergedAccum {
    std::uint64_t total = 0;
    std::array<std::uint64_t, kPredicateCount> counts{};
    mpz_class max_sq = 0;
    std::uint64_t max_count = 0;
    std::unordered_set<std::string> distinct;
    std::unordered_map<std::string, detail::DbLocalRecord> database;
};

template <class Scalar>
void fold_shard(MergedAccum& into, ShardAccum<Scalar>&& shard) {
    into.total += shard.total;
    for (int i = 0; i < kPredicateCount; ++i) into.counts[static_cast<std::size_t>(i)] += shard.counts[static_cast<std::size_t>(i)];
    if (shard.max_count > 0) {
        mpz_class sq;
        if constexpr (std::is_same_v<decltype(shard.max_sq), mpz_class>)
            sq = shard.max_sq;
        else
            sq = mpz_class(static_cast<long>(shard.max_sq));
        if (into.max_count == 0 || sq > into.max_sq) {
            into.max_sq = sq;
            into.max_count = shard.max_count;
        } else if (sq == into.max_sq) {
            into.max_count += shard.max_count;
        }
    }
    into.distinct.merge(shard.distinct);
    for (auto& [key, rec] : shard.database) {
        auto it = into.database.find(key);
        if (it == into.database.end()) {
            into.database.emplace(key, std::move(rec));
        } else {
            it->second.count += rec.count;
            it->second.first_index = std::min(it->second.first_index, rec.first_index);
        }
    }
}

struct RunRequest {
    FamilySpec family;
    PredicateFlags flags;
    std::optional<EnumerationPlan::Sampled> sample;
    int jobs = 0;
    int partitions = 0;
    mpz_class budget;
    std::function<void(std::uint64_t, std::uint64_t)> progress;
};

void validate_request(const RunRequest& req) {
    req.family.validate();
    if (req.flags.want[int(Predicate::nonderogatory)] && req.family.shape == Shape::full)
        throw std::invalid_argument("the nonderogatory certificate applies to upper Hessenberg shapes only");
    if (req.flags.want[int(Predicate::type1_stable)] && !req.family.real_valued())
        throw std::invalid_argument("type1_stable requires real integer entries");
    if (!req.sample) {
        mpz_class card = req.family.cardinality();
        if (card > req.budget)
            throw BudgetExceeded("family cardinality " + card.get_str() + " exceeds the budget " +
                                 req.budget.get_str());
        if (mpz_sizeinbase(card.get_mpz_t(), 2) > 64)
            throw BudgetExceeded("family cardinality " + card.get_str() + " exceeds the 64-bit index space");
    }
}

template <class Scalar>
MergedAccum run_backend(const RunRequest& req) {
    const std::uint64_t total = req.sample ? req.sample->samples
                                           : static_cast<std::uint64_t>(mpz_get_ui(req.family.cardinality().get_mpz_t()));
    int jobs = req.jobs > 0 ? req.jobs : static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    int partitions = req.partitions > 0 ? req.partitions : jobs;
    if (static_cast<std::uint64_t>(partitions) > total) partitions = total ? static_cast<int>(total) : 1;
    jobs = std::min(jobs, partitions);

    std::atomic<std::uint64_t> done{0};
    std::atomic<std::uint64_t> last_report{0};
    std::function<void(std::uint64_t)> tick;
    if (req.progress)
        tick = [&](std::uint64_t batch) {
            std::uint64_t d = done.fetch_add(batch) + batch;
            std::uint64_t prev = last_report.load();
            if (d - prev >= total / 100 + 1 && last_report.compare_exchange_strong(prev, d)) req.progress(d, total);
        };

    std::vector<ShardAccum<Scalar>> shards(static_cast<std::size_t>(partitions));
    std::atomic<int> next{0};
    auto worker = [&] {
        for (;;) {
            int shard = next.fetch_add(1);
            if (shard >= partitions) return;
            std::uint64_t begin = total / partitions * shard + std::min<std::uint64_t>(shard, total % partitions);
            std::uint64_t end = begin + total / partitions + (static_cast<std::uint64_t>(shard) < total % partitions ? 1 : 0);
            shards[static_cast<std::size_t>(shard)] =
                req.sample ? detail::run_sampled_range<Scalar>(req.family, req.flags, req.sample->seed, begin, end, tick)
                           : detail::run_exhaustive_range<Scalar>(req.family, req.flags, begin, end, tick);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    MergedAccum merged;
    for (auto& s : shards) fold_shard(merged, std::move(s));
    return merged;
}

MergedAccum run_dispatch(const RunRequest& req) {
    validate_request(req);
    switch (choose_backend(req.family, req.flags)) {
        case Backend::real64: return run_backend<std::int64_t>(req);
        case Backend::gauss64: return run_backend<GaussInt64>(req);
        default: return run_backend<GaussInt>(req);
    }
}

}  // namespace

Predicate parse_predicate(const std::string& name) {
    for (int i = 0; i < kPredicateCount; ++i)
        if (name == predicate_name(static_cast<Predicate>(i))) return static_cast<Predicate>(i);
    if (name == "max_char_height") return Predicate::max_char_height;
    throw std::invalid_argument("unknown predicate: " + name);
}

ClassCounts enumerate(const EnumerationPlan& plan) {
    RunRequest req;
    req.family = plan.family;
    for (Predicate p : plan.predicates) req.flags.want[static_cast<int>(p)] = true;
    req.flags.distinct = plan.count_distinct;
    req.sample = plan.sample;
    req.jobs = plan.jobs;
    req.partitions = plan.partitions;
    req.budget = plan.budget;
    req.progress = plan.progress;

    auto t0 = std::chrono::steady_clock::now();
    MergedAccum merged = run_dispatch(req);
    auto t1 = std::chrono::steady_clock::now();

    ClassCounts out;
    out.total = merged.total;
    out.counts = merged.counts;
    if (req.flags.want[int(Predicate::max_char_height)]) {
        out.tracked_max_height = true;
        out.max_char_height = magnitude_from_sq(merged.max_sq);
        out.max_char_height_count = merged.max_count;
        out.counts[int(Predicate::max_char_height)] = merged.max_count;
    }
    if (plan.count_distinct) out.distinct_charpolys = merged.distinct.size();
    out.elapsed_s = std::chrono::duration<double>(t1 - t0).count();
    return out;
}

std::uint64_t distinct_charpolys(const FamilySpec& family, const mpz_class& budget, int jobs) {
    RunRequest req;
    req.family = family;
    req.flags.distinct = true;
    req.jobs = jobs;
    req.budget = budget;
    return run_dispatch(req).distinct.size();
}

std::vector<DbRecord> charpoly_database(const FamilySpec& family, const mpz_class& budget, int jobs) {
    RunRequest req;
    req.family = family;
    req.flags.database = true;
    req.jobs = jobs;
    req.budget = budget;
    MergedAccum merged = run_dispatch(req);

    std::vector<DbRecord> records;
    records.reserve(merged.database.size());
    for (auto& [key, rec] : merged.database) {
        DbRecord r;
        r.height = poly_height(rec.coeffs);
        r.mu = r.height.attaining.back();
        r.coeffs = std::move(rec.coeffs);
        r.matrix_count = rec.count;
        r.example_matrix_index = rec.first_index;
        records.push_back(std::move(r));
    }
    auto gauss_less = [](const GaussInt& a, const GaussInt& b) { return a < b; };
    std::sort(records.begin(), records.end(), [&](const DbRecord& a, const DbRecord& b) {
        return std::lexicographical_compare(a.coeffs.coeff.begin(), a.coeffs.coeff.end(), b.coeffs.coeff.begin(),
                                            b.coeffs.coeff.end(), gauss_less);
    });
    return records;
}

}  // namespace bohemian

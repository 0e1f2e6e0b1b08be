#include "topocard/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

namespace topocard {

const char* reading_name(HypothesisReading r) {
    switch (r) {
        case HypothesisReading::LiteralNonT1: return "literal-non-t1";
        case HypothesisReading::PointwiseNonT1: return "pointwise-non-t1";
        case HypothesisReading::NotApplicable: return "n/a";
    }
    return "n/a";
}

const char* reading_short_name(HypothesisReading r) {
    switch (r) {
        case HypothesisReading::LiteralNonT1: return "literal";
        case HypothesisReading::PointwiseNonT1: return "pointwise";
        case HypothesisReading::NotApplicable: return "n/a";
    }
    return "n/a";
}

std::optional<HypothesisReading> parse_reading(const std::string& name) {
    if (name == "literal" || name == "literal-non-t1") return HypothesisReading::LiteralNonT1;
    if (name == "pointwise" || name == "pointwise-non-t1") return HypothesisReading::PointwiseNonT1;
    if (name == "n/a" || name == "na" || name == "none") return HypothesisReading::NotApplicable;
    return std::nullopt;
}

bool theorem_has_readings(const std::string& theorem_id) {
    return theorem_id == "thm3.1" || theorem_id == "thm3.2" || theorem_id == "thm3.3" ||
           theorem_id == "thm3.4";
}

bool theorem_is_set_level(const std::string& theorem_id) {
    return theorem_id == "thm2.1" || theorem_id == "thm2.2" || theorem_id == "thm2.3";
}

int theorem_max_carrier(const std::string& theorem_id) {
    return theorem_is_set_level(theorem_id) ? 6 : kMaxEnumCarrier;
}

bool TheoremCase::is_contained(std::int64_t exact,
                               const std::variant<NatInterval, EstimateErrorCode>& predicted) {
    const NatInterval* interval = std::get_if<NatInterval>(&predicted);
    return interval != nullptr && interval->contains(exact);
}

WitnessAnalysis& WitnessAnalysis::operator+=(const WitnessAnalysis& other) {
    strict_cases_total += other.strict_cases_total;
    strict_cases_contained += other.strict_cases_contained;
    semiopen_sets_total += other.semiopen_sets_total;
    sets_with_contained_witness += other.sets_with_contained_witness;
    sets_all_witnesses_contained += other.sets_all_witnesses_contained;
    return *this;
}

namespace {

using Prediction = std::variant<NatInterval, EstimateErrorCode>;

template <typename Fn>
Prediction run_estimator(Fn&& fn) {
    try {
        return fn();
    } catch (const EstimateError& e) {
        return e.code();
    }
}

struct Accumulator {
    VerificationReport rep;
    std::size_t cap = 0;

    Accumulator(std::string id, int n, HypothesisReading reading, int counterexample_cap) {
        rep.theorem_id = std::move(id);
        rep.n = n;
        rep.reading = reading;
        cap = counterexample_cap > 0 ? static_cast<std::size_t>(counterexample_cap) : 0;
    }

    // space may be null for the set-level theorems; it is only copied when the
    // case actually lands in the counterexample list.
    void record(const FiniteSpace* space, std::vector<PointSet> sets, std::int64_t exact,
                const Prediction& predicted) {
        rep.cases_total += 1;
        if (TheoremCase::is_contained(exact, predicted)) {
            rep.cases_contained += 1;
            return;
        }
        if (rep.counterexamples.size() < cap) {
            TheoremCase c;
            c.theorem_id = rep.theorem_id;
            if (space != nullptr) c.space = *space;
            c.sets = std::move(sets);
            c.exact_value = exact;
            c.predicted = predicted;
            c.contained = false;
            rep.counterexamples.push_back(std::move(c));
        }
    }
};

bool non_t1_holds(const FiniteSpace& space, HypothesisReading reading) {
    return reading == HypothesisReading::LiteralNonT1 ? !is_t1(space)
                                                      : is_pointwise_non_t1(space);
}

bool space_qualifies(const std::string& id, const FiniteSpace& space, HypothesisReading reading) {
    if (id == "thm3.5") return is_hyperconnected(space);
    if (id == "thm3.4") return non_t1_holds(space, reading) && is_extremally_disconnected(space);
    return non_t1_holds(space, reading);
}

// --- set-level sweeps (no topology involved) ---

void sweep_superset(int n, std::uint64_t begin, std::uint64_t end, Accumulator& acc) {
    const std::uint32_t full = (1u << n) - 1u;
    for (std::uint64_t am = begin; am < end; ++am) {
        const std::uint32_t a = static_cast<std::uint32_t>(am);
        for (std::uint32_t b = 0; b <= full; ++b) {
            if ((a & ~b) != 0 || a == b) continue;  // need A proper subset of B
            if (b == full) continue;                // need B proper subset of X
            std::int64_t exact = std::popcount(b);
            SupersetHypothesis h{n, from_scalar(std::popcount(a))};
            acc.record(nullptr, {PointSet(a, n), PointSet(b, n)}, exact,
                       run_estimator([&] { return est_superset_card(h); }));
        }
    }
}

void sweep_factor(int n, std::uint64_t begin, std::uint64_t end, Accumulator& acc) {
    // Outer domain: card(A) = 1..n; every factorization card(C) = card(A)*card(B).
    for (std::uint64_t idx = begin; idx < end; ++idx) {
        const std::int64_t a = static_cast<std::int64_t>(idx) + 1;
        for (std::int64_t b = 0; b <= n; ++b) {
            std::int64_t c = a * b;
            ProductHypothesis h{from_scalar(c), from_scalar(a)};
            acc.record(nullptr, {}, b, run_estimator([&] { return est_factor_card(h); }));
        }
    }
}

void sweep_intersection(int n, std::uint64_t begin, std::uint64_t end, Accumulator& acc) {
    const std::uint32_t full = (1u << n) - 1u;
    for (std::uint64_t am = begin; am < end; ++am) {
        const std::uint32_t a = static_cast<std::uint32_t>(am);
        for (std::uint32_t b = 0; b <= full; ++b) {
            if ((a | b) != full) continue;  // need A union B = X
            std::int64_t exact = std::popcount(a & b);
            UnionSplitHypothesis h{from_scalar(n), from_scalar(std::popcount(a)),
                                   from_scalar(std::popcount(b))};
            acc.record(nullptr, {PointSet(a, n), PointSet(b, n)}, exact,
                       run_estimator([&] { return est_intersection_card(h); }));
        }
    }
}

// --- per-space sweeps for the topological theorems ---

void space_cases_closure(const FiniteSpace& space, Accumulator& acc) {
    const int n = space.n();
    for (std::uint32_t a = 1; a <= space.full_mask(); ++a) {
        const int m = std::popcount(a);
        if (m > n / 2) continue;
        std::int64_t exact = std::popcount(space.closure_mask(a));
        ClosureHypothesis h{n, m};
        acc.record(&space, {PointSet(a, n)}, exact,
                   run_estimator([&] { return est_closure_card(h); }));
    }
}

void space_cases_interior(const FiniteSpace& space, Accumulator& acc) {
    const int n = space.n();
    for (std::uint32_t a = 0; a <= space.full_mask(); ++a) {
        const int p = std::popcount(a);
        if (p < (n + 1) / 2) continue;
        // Tightest admissible caps: the exact singleton-closure sizes. A
        // closed singleton outside A breaks the hypothesis, so that
        // configuration does not qualify.
        InteriorHypothesis h{n, p, {}};
        bool qualifies = true;
        for (int x = 0; x < n; ++x) {
            if ((a >> x) & 1u) continue;
            int kx = std::popcount(space.singleton_closure(x));
            if (kx < 2) {
                qualifies = false;
                break;
            }
            h.k_caps.push_back(kx);
        }
        if (!qualifies) continue;
        std::int64_t exact = std::popcount(space.interior_mask(a));
        acc.record(&space, {PointSet(a, n)}, exact,
                   run_estimator([&] { return est_interior_card(h); }));
    }
}

void space_cases_semiopen(const FiniteSpace& space, Accumulator& acc, WitnessAnalysis& wa) {
    const int n = space.n();
    for (std::uint32_t a = 1; a <= space.full_mask(); ++a) {
        bool found_witness = false;
        bool any_contained = false;
        bool all_contained = true;
        for (std::uint32_t o : space.opens()) {
            if (o == 0 || (o & ~a) != 0) continue;
            const std::uint32_t cl_o = space.closure_mask(o);
            if ((a & ~cl_o) != 0) continue;
            // o is a witness: O <= A <= cl(O).
            found_witness = true;
            SemiOpenHypothesis h{n, std::popcount(o)};
            Prediction predicted = run_estimator([&] { return est_semiopen_card(h); });
            std::int64_t exact = std::popcount(a);
            bool contained = TheoremCase::is_contained(exact, predicted);
            any_contained |= contained;
            all_contained &= contained;
            if (o != a && a != cl_o) {
                wa.strict_cases_total += 1;
                if (contained) wa.strict_cases_contained += 1;
            }
            acc.record(&space, {PointSet(a, n), PointSet(o, n)}, exact, predicted);
        }
        if (found_witness) {
            wa.semiopen_sets_total += 1;
            if (any_contained) wa.sets_with_contained_witness += 1;
            if (all_contained) wa.sets_all_witnesses_contained += 1;
        }
    }
}

void space_cases_ed_union(const FiniteSpace& space, Accumulator& acc) {
    const int n = space.n();
    for (std::uint32_t o1 : space.opens()) {
        for (std::uint32_t o2 : space.opens()) {
            if (o1 == 0 || o2 == 0 || (o1 & o2) != 0) continue;
            std::int64_t exact = std::popcount(space.closure_mask(o1 | o2));
            EdUnionHypothesis h{from_scalar(n), from_scalar(std::popcount(o1)),
                                from_scalar(std::popcount(o2))};
            acc.record(&space, {PointSet(o1, n), PointSet(o2, n)}, exact,
                       run_estimator([&] { return est_ed_union_closure_card(h); }));
        }
    }
}

void space_cases_hyper_intersection(const FiniteSpace& space, Accumulator& acc) {
    const int n = space.n();
    for (std::uint32_t o1 : space.opens()) {
        for (std::uint32_t o2 : space.opens()) {
            if (o1 == 0 || o2 == 0 || (o1 | o2) != space.full_mask()) continue;
            std::int64_t exact = std::popcount(o1 & o2);
            UnionSplitHypothesis h{from_scalar(n), from_scalar(std::popcount(o1)),
                                   from_scalar(std::popcount(o2))};
            acc.record(&space, {PointSet(o1, n), PointSet(o2, n)}, exact,
                       run_estimator([&] { return est_hyperconnected_intersection_card(h); }));
        }
    }
}

std::uint64_t sweep_domain(const std::string& id, int n) {
    if (id == "thm2.2") return static_cast<std::uint64_t>(n);
    if (theorem_is_set_level(id)) return std::uint64_t{1} << n;
    return preorder_candidate_count(n);
}

// One contiguous slice of the sweep; the unit merged across threads/shards.
VerificationReport run_range(const std::string& id, int n, HypothesisReading reading,
                             std::uint64_t begin, std::uint64_t end, int cap) {
    Accumulator acc(id, n, reading, cap);
    if (id == "thm2.1") {
        sweep_superset(n, begin, end, acc);
    } else if (id == "thm2.2") {
        sweep_factor(n, begin, end, acc);
    } else if (id == "thm2.3") {
        sweep_intersection(n, begin, end, acc);
    } else {
        WitnessAnalysis wa;
        SpecializationPreorder pre;
        for (std::uint64_t c = begin; c < end; ++c) {
            if (!decode_preorder(n, c, pre)) continue;
            FiniteSpace space = alexandrov_space(pre);
            if (!space_qualifies(id, space, reading)) continue;
            if (id == "thm3.1") {
                space_cases_closure(space, acc);
            } else if (id == "thm3.2") {
                space_cases_interior(space, acc);
            } else if (id == "thm3.3") {
                space_cases_semiopen(space, acc, wa);
            } else if (id == "thm3.4") {
                space_cases_ed_union(space, acc);
            } else {
                space_cases_hyper_intersection(space, acc);
            }
        }
        if (id == "thm3.3") acc.rep.witness_analysis = wa;
    }
    return std::move(acc.rep);
}

int effective_threads(int requested, std::uint64_t range_size) {
    int t = requested;
    if (t <= 0) {
        unsigned hw = std::thread::hardware_concurrency();
        t = hw == 0 ? 1 : static_cast<int>(std::min(hw, 8u));
    }
    if (range_size < static_cast<std::uint64_t>(t)) t = range_size == 0 ? 1 : static_cast<int>(range_size);
    return t;
}

}  // namespace

VerificationReport verify_theorem(const std::string& theorem_id, int n, HypothesisReading reading,
                                  const VerifyOptions& opts) {
    const auto started = std::chrono::steady_clock::now();
    if (!is_known_theorem(theorem_id))
        throw UnknownTheorem("unknown theorem identifier: " + theorem_id);
    const int max_n = theorem_max_carrier(theorem_id);
    if (n < 1 || n > max_n)
        throw CarrierTooLarge(theorem_id + " verification supports carriers of 1 to " +
                              std::to_string(max_n) + " points, got " + std::to_string(n));
    HypothesisReading effective = reading;
    if (theorem_has_readings(theorem_id)) {
        if (reading == HypothesisReading::NotApplicable)
            throw std::invalid_argument("theorem " + theorem_id +
                                        " requires a literal or pointwise non-T1 reading");
    } else {
        effective = HypothesisReading::NotApplicable;
    }
    if (opts.shard_count < 1 || opts.shard_index < 0 || opts.shard_index >= opts.shard_count)
        throw std::invalid_argument("shard index must lie in [0, shard count)");

    const std::uint64_t domain = sweep_domain(theorem_id, n);
    const std::uint64_t begin =
        domain * static_cast<std::uint64_t>(opts.shard_index) / opts.shard_count;
    const std::uint64_t end =
        domain * (static_cast<std::uint64_t>(opts.shard_index) + 1) / opts.shard_count;

    const int workers = effective_threads(opts.threads, end - begin);
    std::vector<VerificationReport> parts;
    parts.reserve(workers);
    if (workers <= 1) {
        parts.push_back(run_range(theorem_id, n, effective, begin, end, opts.counterexample_cap));
    } else {
        parts.resize(workers);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        const std::uint64_t span = end - begin;
        for (int w = 0; w < workers; ++w) {
            const std::uint64_t lo = begin + span * static_cast<std::uint64_t>(w) / workers;
            const std::uint64_t hi = begin + span * (static_cast<std::uint64_t>(w) + 1) / workers;
            pool.emplace_back([&, w, lo, hi] {
                parts[w] = run_range(theorem_id, n, effective, lo, hi, opts.counterexample_cap);
            });
        }
        for (auto& t : pool) t.join();
    }

    VerificationReport merged = merge_reports(parts, opts.counterexample_cap);
    merged.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return merged;
}

std::vector<VerificationReport> verify_all(int n_max,
                                           const std::vector<HypothesisReading>& readings,
                                           const VerifyOptions& opts) {
    if (n_max < 1 || n_max > kMaxEnumCarrier)
        throw CarrierTooLarge("verify_all supports carriers of 1 to " +
                              std::to_string(kMaxEnumCarrier) + " points, got " +
                              std::to_string(n_max));
    std::vector<HypothesisReading> wanted;
    for (HypothesisReading r : readings) {
        if (r == HypothesisReading::NotApplicable) continue;
        if (std::find(wanted.begin(), wanted.end(), r) == wanted.end()) wanted.push_back(r);
    }
    if (wanted.empty())
        wanted = {HypothesisReading::LiteralNonT1, HypothesisReading::PointwiseNonT1};

    std::vector<VerificationReport> reports;
    for (const char* id : kTheoremIds) {
        for (int n = 1; n <= n_max; ++n) {
            if (theorem_has_readings(id)) {
                for (HypothesisReading r : wanted)
                    reports.push_back(verify_theorem(id, n, r, opts));
            } else {
                reports.push_back(verify_theorem(id, n, HypothesisReading::NotApplicable, opts));
            }
        }
    }
    return reports;
}

VerificationReport merge_reports(const std::vector<VerificationReport>& parts,
                                 int counterexample_cap) {
    if (parts.empty()) throw std::invalid_argument("cannot merge an empty list of reports");
    VerificationReport out;
    out.theorem_id = parts.front().theorem_id;
    out.n = parts.front().n;
    out.reading = parts.front().reading;
    const std::size_t cap =
        counterexample_cap > 0 ? static_cast<std::size_t>(counterexample_cap) : 0;
    for (const VerificationReport& part : parts) {
        if (part.theorem_id != out.theorem_id || part.n != out.n || part.reading != out.reading)
            throw std::invalid_argument("cannot merge reports from different sweeps");
        out.cases_total += part.cases_total;
        out.cases_contained += part.cases_contained;
        for (const TheoremCase& c : part.counterexamples) {
            if (out.counterexamples.size() < cap) out.counterexamples.push_back(c);
        }
        if (part.witness_analysis) {
            if (!out.witness_analysis) out.witness_analysis = WitnessAnalysis{};
            *out.witness_analysis += *part.witness_analysis;
        }
        out.elapsed_seconds += part.elapsed_seconds;
    }
    return out;
}

}  // namespace topocard

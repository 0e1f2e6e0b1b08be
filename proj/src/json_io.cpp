#include "topocard/json_io.hpp"

#include <cinttypes>
#include <cstdio>

namespace topocard {

using nlohmann::json;

json interval_to_json(const NatInterval& v) { return json::array({v.lo, v.hi}); }

NatInterval interval_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw std::invalid_argument("interval must be a two-element integer array [lo, hi]");
    return NatInterval(j[0].get<std::int64_t>(), j[1].get<std::int64_t>());
}

json space_to_json(const FiniteSpace& space) {
    json opens = json::array();
    for (std::uint32_t o : space.opens()) opens.push_back(o);
    return json{{"n", space.n()}, {"opens", std::move(opens)}};
}

FiniteSpace space_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("opens") ||
        !j["n"].is_number_integer() || !j["opens"].is_array())
        throw std::invalid_argument("space must be an object {\"n\": int, \"opens\": [int, ...]}");
    std::vector<std::uint32_t> opens;
    opens.reserve(j["opens"].size());
    for (const json& o : j["opens"]) {
        if (!o.is_number_integer() || o.get<std::int64_t>() < 0)
            throw std::invalid_argument("opens must be nonnegative integer bitmasks");
        opens.push_back(static_cast<std::uint32_t>(o.get<std::int64_t>()));
    }
    return FiniteSpace::validate(j["n"].get<int>(), std::move(opens));
}

json pointset_to_json(const PointSet& s) {
    json points = json::array();
    for (int x = 0; x < s.n; ++x)
        if ((s.bits >> x) & 1u) points.push_back(x);
    return points;
}

json classification_to_json(const FiniteSpace& space) {
    SpaceClassification c = classify(space);
    json cards = json::array();
    for (int x = 0; x < space.n(); ++x)
        cards.push_back(std::popcount(space.singleton_closure(x)));
    return json{{"n", space.n()},
                {"t0", c.t0},
                {"t1", c.t1},
                {"pointwise_non_t1", c.pointwise_non_t1},
                {"extremally_disconnected", c.extremally_disconnected},
                {"hyperconnected", c.hyperconnected},
                {"singleton_closure_cards", std::move(cards)}};
}

json case_to_json(const TheoremCase& c) {
    json out{{"theorem_id", c.theorem_id},
             {"exact_value", c.exact_value},
             {"contained", c.contained}};
    out["space"] = c.space ? space_to_json(*c.space) : json(nullptr);
    json sets = json::array();
    for (const PointSet& s : c.sets) sets.push_back(pointset_to_json(s));
    out["sets"] = std::move(sets);
    if (const NatInterval* interval = std::get_if<NatInterval>(&c.predicted))
        out["predicted"] = interval_to_json(*interval);
    else
        out["predicted"] = json{{"error", estimate_error_name(std::get<EstimateErrorCode>(c.predicted))}};
    return out;
}

json report_to_json(const VerificationReport& report) {
    json out{{"theorem_id", report.theorem_id},
             {"n", report.n},
             {"hypothesis_reading", reading_name(report.reading)},
             {"cases_total", report.cases_total},
             {"cases_contained", report.cases_contained},
             {"containment_rate", report.containment_rate()},
             {"elapsed_seconds", report.elapsed_seconds}};
    json cases = json::array();
    for (const TheoremCase& c : report.counterexamples) cases.push_back(case_to_json(c));
    out["counterexamples"] = std::move(cases);
    if (report.witness_analysis) {
        const WitnessAnalysis& wa = *report.witness_analysis;
        out["witness_analysis"] = json{
            {"strict_cases_total", wa.strict_cases_total},
            {"strict_cases_contained", wa.strict_cases_contained},
            {"semiopen_sets_total", wa.semiopen_sets_total},
            {"sets_with_contained_witness", wa.sets_with_contained_witness},
            {"sets_all_witnesses_contained", wa.sets_all_witnesses_contained}};
    }
    return out;
}

json reports_to_json(const std::vector<VerificationReport>& reports) {
    json out = json::array();
    for (const VerificationReport& r : reports) out.push_back(report_to_json(r));
    return out;
}

std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
    std::string out =
        "theorem_id,n,reading,cases_total,cases_contained,containment_rate,n_counterexamples\n";
    char row[256];
    for (const VerificationReport& r : reports) {
        std::snprintf(row, sizeof row, "%s,%d,%s,%" PRId64 ",%" PRId64 ",%.6f,%zu\n",
                      r.theorem_id.c_str(), r.n, reading_short_name(r.reading), r.cases_total,
                      r.cases_contained, r.containment_rate(), r.counterexamples.size());
        out += row;
    }
    return out;
}

std::string report_summary_line(const VerificationReport& report) {
    char line[256];
    std::snprintf(line, sizeof line, "%s n=%d reading=%s %" PRId64 "/%" PRId64 " contained (%.1f%%)",
                  report.theorem_id.c_str(), report.n, reading_short_name(report.reading),
                  report.cases_contained, report.cases_total, report.containment_rate() * 100.0);
    return line;
}

}  // namespace topocard

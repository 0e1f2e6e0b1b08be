#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "topocard/interval.hpp"
#include "topocard/topology.hpp"
#include "topocard/verifier.hpp"

namespace topocard {

// Intervals serialize as two-element arrays [lo, hi].
nlohmann::json interval_to_json(const NatInterval& v);
NatInterval interval_from_json(const nlohmann::json& j);

// Spaces serialize as {"n": 3, "opens": [0, 1, 3, 7]} with opens as sorted
// bitmask integers. Parsing validates the family and may throw NotATopology.
nlohmann::json space_to_json(const FiniteSpace& space);
FiniteSpace space_from_json(const nlohmann::json& j);

// A point set serializes as the sorted list of its point indices.
nlohmann::json pointset_to_json(const PointSet& s);

// Classification flags plus per-point singleton-closure sizes.
nlohmann::json classification_to_json(const FiniteSpace& space);

nlohmann::json case_to_json(const TheoremCase& c);
nlohmann::json report_to_json(const VerificationReport& report);
nlohmann::json reports_to_json(const std::vector<VerificationReport>& reports);

// CSV summary with one row per report. Columns:
// theorem_id,n,reading,cases_total,cases_contained,containment_rate,n_counterexamples
std::string reports_to_csv(const std::vector<VerificationReport>& reports);

// One-line human summary, e.g. "thm3.1 n=4 reading=pointwise 1404/1492 contained (94.1%)".
std::string report_summary_line(const VerificationReport& report);

}  // namespace topocard

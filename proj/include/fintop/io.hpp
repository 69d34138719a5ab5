#pragma once

#include "fintop/contraction.hpp"
#include "fintop/homology.hpp"
#include "fintop/point_map.hpp"
#include "fintop/poset.hpp"
#include "fintop/verify.hpp"

#include "json.hpp" // vendored nlohmann/json

#include <iosfwd>
#include <string>

namespace fintop {

// Poset files: one directive per line, '#' starts a comment.
//   element NAME
//   rel LOWER < UPPER
FinitePoset parse_poset(std::istream& in, const std::string& filename = "<input>");
FinitePoset load_poset(const std::string& path);

// Map files: lines "map NAME -> NAME"; must be total over the domain.
PointMap parse_map(std::istream& in, const FinitePoset& dom, const FinitePoset& cod,
                   const std::string& filename = "<input>");
PointMap load_map(const std::string& path, const FinitePoset& dom, const FinitePoset& cod);

nlohmann::json poset_to_json(const FinitePoset& X);
FinitePoset poset_from_json(const nlohmann::json& j);

// {"betti": [...], "torsion": [[...]], "hdim": n}; trailing zero degrees are
// trimmed so a contractible space reports betti [1].
nlohmann::json homology_to_json(const HomologyResult& h);

nlohmann::json ledger_to_json(const CheckLedger& ledger);
nlohmann::json report_to_json(const BettiReport& report);
nlohmann::json trace_steps_to_json(const ContractionTrace& t);
nlohmann::json sweep_to_json(const SweepSummary& summary);

} // namespace fintop

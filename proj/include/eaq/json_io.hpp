#ifndef EAQ_JSON_IO_HPP
#define EAQ_JSON_IO_HPP

#include <json.hpp>

#include "eaq/bounds.hpp"
#include "eaq/linear_code.hpp"
#include "eaq/protocol.hpp"
#include "eaq/qudit.hpp"

namespace eaq {

using Json = nlohmann::ordered_json;

// {"field": "<spec>", "n": int, "kappa": int, "gen": [[symbol indices]], "d": int|null}
Json code_to_json(const LinearCode& code);
LinearCode code_from_json(const Json& j);

// {"bell":[[a,b],...],"sent":[...],"recv":[...],"verdict":"ok|fail","corr":[[a,b],...],"fidelity":float}
Json transcript_to_json(const Transcript& tr);

// Debug dump: label list plus interleaved re/im amplitudes.
Json state_to_json(const QuditState& state);

Json report_to_json(const BoundReport& rep);

Json summary_to_json(const MonteCarloSummary& s);

} // namespace eaq

#endif

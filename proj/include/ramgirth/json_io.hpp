#pragma once

#include <ramgirth/bounds.hpp>
#include <ramgirth/colouring.hpp>
#include <ramgirth/exact.hpp>
#include <ramgirth/girth.hpp>
#include <ramgirth/graph.hpp>
#include <ramgirth/lognum.hpp>
#include <ramgirth/params.hpp>
#include <ramgirth/prng.hpp>
#include <ramgirth/trials.hpp>

#include <json.hpp>

#include <string_view>

namespace ramgirth {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view schema_version = "v1";
inline constexpr std::string_view tool_name = "ramgirth";
inline constexpr std::string_view tool_version = RAMGIRTH_VERSION;

/// {"sign": -1|0|1, "log2": "<decimal>"}; zero carries "-inf".
Json to_json(const LogNum & x);
LogNum lognum_from_json(const Json & j, mpfr_prec_t prec = default_precision);

Json to_json(const Graph & g);
Json to_json(const Colouring & c);
Json to_json(const GirthVerdict & v);
Json to_json(const CycleReport & r, bool with_cycles);
Json to_json(const ParamSet & ps);
Json to_json(const ContainerVerdict & v);
Json to_json(const FBoundsReport & r);
Json to_json(const FactVdwReport & r);
Json to_json(const ArrowResult & r);
Json to_json(const SweepResult & r);
Json to_json(const ExtremalResult & r);

Json to_json(const TrialConfig & c);
/// One JSONL line of a trial stream; carries the config, so each line stands
/// on its own.
Json trial_record_json(const TrialConfig & c, const TrialRecord & r);
Json trial_summary_json(const TrialConfig & c, const TrialSummary & s);

/// {"v", "tool", "version", "command", "config", "result"}.
Json envelope(std::string_view command, Json config, Json result);

} // namespace ramgirth

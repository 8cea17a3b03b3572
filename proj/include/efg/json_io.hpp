#pragma once

#include <string>

#include <json.hpp>

#include "efg/rational.hpp"
#include "efg/signal.hpp"

namespace efg {

using json = nlohmann::json;

/// Accepts "p/q" strings, integers, or [num, den] pairs.
Rational rational_from_json(const json& j);
inline json rational_to_json(const Rational& r) { return r.str(); }

/*
 * Signal JSON:  {"predicates": {"P": [[lo_num, lo_den, hi_num, hi_den], ...]}}
 *
 * Intervals that are not half-open carry two trailing booleans
 * [lo_num, lo_den, hi_num, hi_den, lo_closed, hi_closed].  The loader
 * normalizes on ingest.
 */
Signal signal_from_json(const json& j);
json signal_to_json(const Signal& s);

/// Parses inline JSON text, or reads the file when `text` names one.
json load_json_argument(const std::string& text);

}  // namespace efg

#pragma once

// JSON formats. Rationals are canonical strings ("3", "-1/2") and all
// indices are 0-based.
//
//   matrix       {"rows": n, "cols": m, "entries": [["p/q", ...], ...]}
//   graph        {"n": n, "edges": [[u, v], ...], "root": r}
//   certificate  {"graph": ..., "matrix": ..., "pair": [k, l],
//                 "index": "upper|neutral|downer", "snip": bool,
//                 "snip_direct": ..., "snip_cases": ..., "snip_recipe": ...}
//   xixi report  {"graph": ..., "certified_lower": int, "minor_value": int,
//                 "saturated": bool, "edge_bound_ok": bool,
//                 "certificates": [...]}

#include <nlohmann/json.hpp>
#include <set>
#include <string>

#include "sniplab/constructions.hpp"
#include "sniplab/ratmat.hpp"
#include "sniplab/rgraph.hpp"
#include "sniplab/snipcore.hpp"
#include "sniplab/xixi.hpp"

namespace sniplab {

using Json = nlohmann::ordered_json;

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json graph_to_json(const RootedGraph& g);
RootedGraph graph_from_json(const Json& j);

Json pair_to_json(const NullityPair& p);
NullityPair pair_from_json(const Json& j);

Json certificate_to_json(const SnipCertificate& c);
SnipCertificate certificate_from_json(const Json& j);

Json report_to_json(const XiXiReport& r);
XiXiReport report_from_json(const Json& j);

Json pair_flags_to_json(const std::set<PairFlag>& flags);
std::set<PairFlag> pair_flags_from_json(const Json& j);

Json step_to_json(const PerturbStep& s);

/// Parses text as JSON, throwing ParseError with the parser's message.
Json parse_json(const std::string& text);

}  // namespace sniplab

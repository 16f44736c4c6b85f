#pragma once

// File formats.
//
// Graph text:   first line n, then "u v m" per unordered pair (m >= 1);
//               blank lines and '#' comments are ignored.
// Graph JSON:   {"n": n, "edges": [[u, v, m], ...]}, or any object holding
//               such a value under "graph".
// Divisor:      one line of n integers, or {"chips": [...]}.
// Thresholds:   one line of n nonnegative integers, or {"tau": [...]}.
//
// Parsers sniff the first non-blank character: '{' selects JSON.

#include <istream>
#include <string>

#include "json.hpp"

#include "divrank/chipfire.hpp"
#include "divrank/distance.hpp"
#include "divrank/multigraph.hpp"
#include "divrank/oracles.hpp"
#include "divrank/reductions.hpp"
#include "divrank/tss.hpp"

namespace divrank::io {

using nlohmann::json;

Multigraph parse_graph(std::istream& in);
Multigraph parse_graph(const std::string& text);
Multigraph read_graph_file(const std::string& path);

Divisor parse_divisor(std::istream& in);
Divisor parse_divisor(const std::string& text);
Divisor read_divisor_file(const std::string& path);

Thresholds parse_thresholds(std::istream& in);
Thresholds parse_thresholds(const std::string& text);
Thresholds read_thresholds_file(const std::string& path);

std::string graph_text(const Multigraph& g);
std::string divisor_text(const Divisor& f);

json to_json(const Multigraph& g);
json to_json(const Divisor& f);  // {"chips": [...]}
json to_json(const GameTrace& t);
json to_json(const DistanceResult& r);
json to_json(const TargetSet& s);  // sorted id list
json to_json(const oracles::OracleReport& r);

// Sidecar {"N": ..., "M": ..., "roles": [...]} plus the embedded graph and
// chips, so the bundle itself parses as a graph file and a divisor file.
json to_json(const TssToRecInstance& inst);
json to_json(const RecToNonhaltInstance& inst);
json to_json(const TssToNonhaltInstance& inst);
json to_json(const SubdividedInstance& inst);

Multigraph graph_from_json(const json& j);
Divisor divisor_from_json(const json& j);

}  // namespace divrank::io

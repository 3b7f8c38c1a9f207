#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "lprg/hypothesis.hpp"
#include "lprg/oracles.hpp"
#include "lprg/prg.hpp"

namespace lprg {

using json = nlohmann::json;

inline constexpr const char* kToolVersion = "0.1.0";

/// `xormaj:a,b` or `table:<hex>:<arity>` (hex as in bits_to_hex).
Predicate parse_predicate_spec(const std::string& spec);
std::string predicate_spec(const Predicate& p);

json predicate_to_json(const Predicate& p);
Predicate predicate_from_json(const json& j);

json hypergraph_to_json(const Hypergraph& g);
Hypergraph hypergraph_from_json(const json& j);

/// {meta, n, k, predicate, edges, labels, truth}. With `blind` the truth is
/// the string "hidden".
json challenge_to_json(const ChallengeSequence& c, const Predicate& p, const json& meta,
                       bool blind);
ChallengeSequence challenge_from_json(const json& j);

/// {kind, dim, domain, range, payload}. Integers and doubles in weight arrays
/// are decimal strings so they survive any JSON reader unchanged.
json hypothesis_to_json(const Hypothesis& h);
Hypothesis hypothesis_from_json(const json& j);

/// Shortest-exact decimal form (%.17g) and its inverse.
std::string format_double(double v);
double parse_double(const std::string& s);

json make_meta(const std::string& command, std::uint64_t seed, const json& params);

/// One JSON object per line: {"input": hex or decimal array, "label": x}.
json example_to_json(const Example& ex);
Example example_from_json(const json& j, std::size_t dim);

/// Stable serialization (sorted keys, two-space indent, trailing newline).
std::string dump(const json& j);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace lprg

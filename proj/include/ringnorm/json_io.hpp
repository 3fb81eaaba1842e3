#ifndef RINGNORM_JSON_IO_HPP
#define RINGNORM_JSON_IO_HPP

#include <json.hpp>

#include "ringnorm/connection.hpp"
#include "ringnorm/norm.hpp"

// JSON shapes for the wire-facing types. Positions stay 1-based and arcs
// stay lexicographically sorted, exactly as the structs hold them.

namespace ringnorm {

inline void to_json(nlohmann::json& j, const Connection& c) {
  nlohmann::json arcs = nlohmann::json::array();
  for (const auto& [i, k] : c.arcs) arcs.push_back({i, k});
  j = nlohmann::json{{"word_length", c.word_length},
                     {"distinguished", c.distinguished},
                     {"arcs", std::move(arcs)}};
}

inline void to_json(nlohmann::json& j, const ElementaryOp& op) {
  j = nlohmann::json{{"kind", op.kind == OpKind::kInsert ? "insert" : "delete"},
                     {"position", op.position},
                     {"sign", op.sign},
                     {"conjugator", format(op.conjugator)}};
}

// Norm and metric values serialize as a number, or the string "inf".
inline nlohmann::json norm_value_json(std::uint32_t value) {
  if (value == kInfNorm) return "inf";
  return value;
}

}  // namespace ringnorm

#endif  // RINGNORM_JSON_IO_HPP

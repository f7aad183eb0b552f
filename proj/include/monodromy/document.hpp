#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "monodromy/instances.hpp"
#include "monodromy/moves.hpp"
#include "monodromy/semigroup.hpp"

namespace monodromy {

inline constexpr const char* kSchemaVersion = "1";

/// {"schema_version": "1", "m": int, "factors": [{"class": "A<i>"|"Abar1",
/// "conj": [ints]}], "name"?: string}
struct FactorizationDocument {
  std::string name;  // empty when absent
  Factorization value;
  friend bool operator==(const FactorizationDocument&, const FactorizationDocument&) = default;
};

/// Throws ParseError on malformed input.
FactorizationDocument parse_factorization_document(std::string_view json);
std::string to_json(const FactorizationDocument& doc, int indent = -1);
FactorizationDocument read_factorization_file(const std::string& path);

/// Array of {"op": "L"|"R"|"conj"|"insert"|"cancel", "i"?: int, "g"?: [ints]}.
/// Words are read over `strands` strands.
MoveCertificate parse_certificate(std::string_view json, int strands);
std::string certificate_to_json(const MoveCertificate& cert, int indent = -1);

/// Array of {"name", "first", "second"} with factorization documents.
std::string instances_to_json(const std::vector<InstancePair>& pairs, int indent = -1);
std::vector<InstancePair> parse_instances(std::string_view json);

}  // namespace monodromy

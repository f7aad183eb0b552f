#include "monodromy/document.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace monodromy {

namespace {

using json = nlohmann::ordered_json;

json parse_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object()) throw ParseError("expected a JSON object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

int as_int(const json& v, const char* what) {
  if (!v.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return v.get<int>();
}

BraidWord word_from(const json& v, int strands, const char* what) {
  if (!v.is_array()) throw ParseError(std::string(what) + " must be an array of integers");
  std::vector<int> letters;
  for (const auto& x : v) letters.push_back(as_int(x, what));
  try {
    return BraidWord(strands, std::move(letters));
  } catch (const PreconditionError& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

json word_json(const BraidWord& w) { return json(w.letters()); }

json factorization_json(const FactorizationDocument& doc) {
  json out;
  out["schema_version"] = kSchemaVersion;
  out["m"] = doc.value.strands;
  json factors = json::array();
  for (const auto& f : doc.value.factors) {
    factors.push_back({{"class", f.cls.tag()}, {"conj", word_json(f.conj)}});
  }
  out["factors"] = std::move(factors);
  if (!doc.name.empty()) out["name"] = doc.name;
  return out;
}

FactorizationDocument factorization_from(const json& v) {
  const json& version = field(v, "schema_version");
  if (!version.is_string() || version.get<std::string>() != kSchemaVersion) {
    throw ParseError("unsupported schema_version (expected \"1\")");
  }
  const int m = as_int(field(v, "m"), "m");
  if (m < 2 || m > kMaxStrands) throw ParseError("m out of range");
  const json& factors = field(v, "factors");
  if (!factors.is_array()) throw ParseError("factors must be an array");
  FactorizationDocument doc;
  doc.value = Factorization(m);
  for (const auto& f : factors) {
    const json& cls = field(f, "class");
    if (!cls.is_string()) throw ParseError("class must be a string");
    doc.value.factors.push_back(
        {SingClass::parse(cls.get<std::string>()), word_from(field(f, "conj"), m, "conj")});
  }
  if (auto it = v.find("name"); it != v.end()) {
    if (!it->is_string()) throw ParseError("name must be a string");
    doc.name = it->get<std::string>();
  }
  return doc;
}

}  // namespace

FactorizationDocument parse_factorization_document(std::string_view text) {
  return factorization_from(parse_text(text));
}

std::string to_json(const FactorizationDocument& doc, int indent) {
  return factorization_json(doc).dump(indent);
}

FactorizationDocument read_factorization_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_factorization_document(text.str());
}

MoveCertificate parse_certificate(std::string_view text, int strands) {
  const json v = parse_text(text);
  if (!v.is_array()) throw ParseError("certificate must be a JSON array");
  MoveCertificate cert;
  for (const auto& rec : v) {
    const json& op = field(rec, "op");
    if (!op.is_string()) throw ParseError("op must be a string");
    const std::string name = op.get<std::string>();
    auto position = [&] {
      const int i = as_int(field(rec, "i"), "i");
      if (i < 1) throw ParseError("positions are 1-based");
      return i;
    };
    if (name == "R") {
      cert.moves.push_back(HurwitzR{position()});
    } else if (name == "L") {
      cert.moves.push_back(HurwitzL{position()});
    } else if (name == "conj") {
      cert.moves.push_back(Conj{word_from(field(rec, "g"), strands, "g")});
    } else if (name == "insert") {
      const int i = position();
      cert.moves.push_back(Insert{i, word_from(field(rec, "g"), strands, "g")});
    } else if (name == "cancel") {
      cert.moves.push_back(Cancel{position()});
    } else {
      throw ParseError("unknown op '" + name + "'");
    }
  }
  return cert;
}

std::string certificate_to_json(const MoveCertificate& cert, int indent) {
  json out = json::array();
  for (const auto& m : cert.moves) {
    if (auto* r = std::get_if<HurwitzR>(&m)) {
      out.push_back({{"op", "R"}, {"i", r->i}});
    } else if (auto* l = std::get_if<HurwitzL>(&m)) {
      out.push_back({{"op", "L"}, {"i", l->i}});
    } else if (auto* c = std::get_if<Conj>(&m)) {
      out.push_back({{"op", "conj"}, {"g", word_json(c->g)}});
    } else if (auto* in = std::get_if<Insert>(&m)) {
      out.push_back({{"op", "insert"}, {"i", in->i}, {"g", word_json(in->g)}});
    } else {
      out.push_back({{"op", "cancel"}, {"i", std::get<Cancel>(m).i}});
    }
  }
  return out.dump(indent);
}

std::string instances_to_json(const std::vector<InstancePair>& pairs, int indent) {
  json out = json::array();
  for (const auto& p : pairs) {
    out.push_back({{"name", p.name},
                   {"first", factorization_json({p.name + "/first", p.first})},
                   {"second", factorization_json({p.name + "/second", p.second})}});
  }
  return out.dump(indent);
}

std::vector<InstancePair> parse_instances(std::string_view text) {
  const json v = parse_text(text);
  if (!v.is_array()) throw ParseError("instance list must be a JSON array");
  std::vector<InstancePair> out;
  for (const auto& rec : v) {
    const json& name = field(rec, "name");
    if (!name.is_string()) throw ParseError("name must be a string");
    out.push_back({name.get<std::string>(), factorization_from(field(rec, "first")).value,
                   factorization_from(field(rec, "second")).value});
  }
  return out;
}

}  // namespace monodromy

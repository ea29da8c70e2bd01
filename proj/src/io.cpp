#include "powq/io.hpp"

#include <fstream>
#include <sstream>

#include "powq/error.hpp"

namespace powq {

namespace {

using nlohmann::json;

const json& field(const json& doc, const char* key) {
  if (!doc.is_object()) throw ParseError("expected a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t as_size(const json& v, const char* what) {
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ParseError(std::string(what) + " must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

std::vector<Index> index_array(const json& v, std::size_t expected, const char* what) {
  if (!v.is_array()) throw ParseError(std::string(what) + " must be an array");
  if (v.size() != expected) {
    throw ParseError(std::string(what) + " has " + std::to_string(v.size()) + " entries, expected " +
                     std::to_string(expected));
  }
  std::vector<Index> out;
  out.reserve(expected);
  for (const auto& x : v) {
    const std::size_t i = as_size(x, what);
    if (i > std::numeric_limits<Index>::max()) throw ParseError(std::string(what) + " entry too large");
    out.push_back(static_cast<Index>(i));
  }
  return out;
}

}  // namespace

FiniteGroup group_from_json(const json& doc) {
  const std::size_t k = as_size(field(doc, "order"), "order");
  if (k == 0) throw ParseError("order must be positive");
  std::vector<Index> mul = index_array(field(doc, "mul"), k * k, "mul");
  std::vector<std::string> names;
  if (doc.contains("names")) {
    const json& n = doc["names"];
    if (!n.is_array() || (!n.empty() && n.size() != k)) throw ParseError("names must be an array of order strings");
    for (const auto& s : n) {
      if (!s.is_string()) throw ParseError("names must be strings");
      names.push_back(s.get<std::string>());
    }
  }
  return validate_group(k, std::move(mul), std::move(names));
}

json group_to_json(const FiniteGroup& g) {
  const std::size_t k = g.order();
  json mul = json::array();
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) mul.push_back(g.mul(static_cast<Index>(a), static_cast<Index>(b)));
  }
  json doc = {{"order", k}, {"mul", std::move(mul)}};
  if (!g.names().empty()) doc["names"] = g.names();
  return doc;
}

PowerQuandle pq_from_json(const json& doc) {
  const std::size_t k = as_size(field(doc, "size"), "size");
  const std::size_t n = as_size(field(doc, "exponent"), "exponent");
  if (k == 0) throw ParseError("size must be positive");
  if (n == 0) throw ParseError("exponent must be positive");
  const std::size_t unit = as_size(field(doc, "unit"), "unit");
  if (unit >= k) throw ParseError("unit out of range");
  return validate_pq(k, static_cast<Index>(unit), n, index_array(field(doc, "conj"), k * k, "conj"),
                     index_array(field(doc, "pow"), n * k, "pow"));
}

json pq_to_json(const PowerQuandle& p) {
  return {{"size", p.size()},
          {"unit", p.unit()},
          {"exponent", p.exponent()},
          {"conj", std::vector<Index>(p.conj_table().begin(), p.conj_table().end())},
          {"pow", std::vector<Index>(p.pow_table().begin(), p.pow_table().end())}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

FiniteGroup read_group_file(const std::string& path) { return group_from_json(read_json_file(path)); }
PowerQuandle read_pq_file(const std::string& path) { return pq_from_json(read_json_file(path)); }

}  // namespace powq

#include "potts/cli/model_file.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace potts::cli {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& origin, const std::string& field, const std::string& what) {
  throw InputError(origin + ": " + field + ": " + what);
}

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

int integer_field(const json& doc, const std::string& key, const std::string& origin) {
  if (!doc.contains(key)) fail(origin, key, "missing");
  const json& v = doc.at(key);
  if (!v.is_number_integer()) fail(origin, key, "expected an integer");
  return v.get<int>();
}

std::vector<int> site_array(const json& v, const std::string& field, const std::string& origin) {
  if (!v.is_array()) fail(origin, field, "expected an array of site indices");
  std::vector<int> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number_integer())
      fail(origin, field + "[" + std::to_string(i) + "]", "expected an integer site index");
    out.push_back(v[i].get<int>());
  }
  return out;
}

Coupling parse_coupling(const json& entry, const std::string& field, const std::string& origin,
                        bool& approximate) {
  if (entry.contains("J")) {
    if (entry.contains("x")) fail(origin, field, "give either x or J, not both");
    const json& j = entry.at("J");
    if (!j.is_number()) fail(origin, field + ".J", "expected a number");
    const double jv = j.get<double>();
    if (!(jv >= 0) || !std::isfinite(std::exp(jv)))
      fail(origin, field + ".J", "J must be a finite number >= 0");
    approximate = true;
    return Coupling(Rational(std::exp(jv)));
  }
  if (!entry.contains("x")) fail(origin, field, "missing coupling x");
  const json& x = entry.at("x");
  Rational value;
  if (x.is_string()) {
    const auto text = x.get<std::string>();
    if (text == "inf" || text == "infinity") return Coupling::infinite();
    try {
      value = parse_rational(text);
    } catch (const std::invalid_argument& e) {
      fail(origin, field + ".x", e.what());
    }
  } else if (x.is_number_integer()) {
    value = Rational(x.get<long>());
  } else {
    fail(origin, field + ".x", "expected a rational string such as \"3/2\" or \"inf\"");
  }
  if (value < 1)
    fail(origin, field + ".x", "coupling " + to_string(value) + " is below 1 (x = exp(J) >= 1)");
  return Coupling(value);
}

}  // namespace

ModelFile parse_model_text(std::string_view text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, column] = line_and_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw InputError(origin + ":" + std::to_string(line) + ":" + std::to_string(column) +
                     ": syntax error: " + e.what());
  }
  if (!doc.is_object()) fail(origin, "<root>", "expected a JSON object");

  const int n = integer_field(doc, "n", origin);
  const int q = integer_field(doc, "q", origin);
  if (n < 1) fail(origin, "n", "must be >= 1");
  if (q < 2) fail(origin, "q", "must be >= 2");

  bool approximate = false;
  InteractionTable table;
  if (doc.contains("interactions")) {
    const json& arr = doc.at("interactions");
    if (!arr.is_array()) fail(origin, "interactions", "expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string field = "interactions[" + std::to_string(i) + "]";
      const json& entry = arr[i];
      if (!entry.is_object()) fail(origin, field, "expected an object");
      if (!entry.contains("sites")) fail(origin, field + ".sites", "missing");
      std::vector<int> sites = site_array(entry.at("sites"), field + ".sites", origin);
      for (int s : sites)
        if (s < 1 || s > n)
          fail(origin, field + ".sites",
               "site " + std::to_string(s) + " outside 1.." + std::to_string(n));
      Coupling x = parse_coupling(entry, field, origin, approximate);
      try {
        table.insert(make_site_set(std::move(sites)), std::move(x));
      } catch (const ModelError& e) {
        fail(origin, field, e.what());
      }
    }
  }

  ModelFile out{ModelSpec(n, q, std::move(table)), {}, approximate};
  if (doc.contains("lists")) {
    const json& lists = doc.at("lists");
    if (!lists.is_object()) fail(origin, "lists", "expected an object of named index lists");
    for (const auto& [name, value] : lists.items()) {
      const std::string field = "lists." + name;
      std::vector<int> sites = site_array(value, field, origin);
      for (int s : sites)
        if (s < 1 || s > n)
          fail(origin, field, "site " + std::to_string(s) + " outside 1.." + std::to_string(n));
      out.lists.emplace(name, IndexList(std::move(sites)));
    }
  }
  return out;
}

ModelFile parse_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open model file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_model_text(buffer.str(), path);
}

std::string model_to_json(const ModelSpec& model, const std::map<std::string, IndexList>& lists) {
  json doc;
  doc["n"] = model.n();
  doc["q"] = model.q();
  doc["interactions"] = json::array();
  for (const auto& [sites, x] : model.interactions())
    doc["interactions"].push_back({{"sites", sites}, {"x", to_string(x)}});
  if (!lists.empty()) {
    doc["lists"] = json::object();
    for (const auto& [name, list] : lists) doc["lists"][name] = list.entries();
  }
  return doc.dump();
}

}  // namespace potts::cli

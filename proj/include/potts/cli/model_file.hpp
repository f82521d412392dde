#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "potts/index_list.hpp"
#include "potts/model.hpp"

namespace potts::cli {

// Malformed or invalid input files; the message carries the line/column for
// syntax errors and the field path (e.g. interactions[0].x) otherwise.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ModelFile {
  ModelSpec model;
  std::map<std::string, IndexList> lists;
  // Set when some coupling was given as a floating-point J and converted.
  bool approximate = false;
};

// Document shape:
//   {"n": 3, "q": 3,
//    "interactions": [{"sites": [1, 3], "x": "2"}, {"sites": [1, 2], "x": "inf"}],
//    "lists": {"R": [1, 3]}}
// x is a string "p", "p/q", a finite decimal or "inf". An entry may give
// "J": <number> instead, converted to x = exp(J) approximately.
ModelFile parse_model_text(std::string_view text, const std::string& origin = "<input>");
ModelFile parse_model_file(const std::string& path);

std::string model_to_json(const ModelSpec& model,
                          const std::map<std::string, IndexList>& lists = {});

}  // namespace potts::cli

// Copyright 2026 The kpair Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kpair/solution_io.h"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "kpair/errors.h"

namespace kpair {
namespace {

using nlohmann::json;

std::vector<int> ParsePermutation(const json& value, int k,
                                  std::string_view field) {
  if (!value.is_array() || static_cast<int>(value.size()) != k) {
    throw Error(ErrorCode::kParse,
                "relabeling." + std::string(field) + " must list k indices");
  }
  std::vector<int> result;
  for (const json& x : value) {
    if (!x.is_number_integer()) {
      throw Error(ErrorCode::kParse, "relabeling entries must be integers");
    }
    result.push_back(x.get<int>() - 1);
  }
  return result;
}

}  // namespace

std::string SerializeSolution(const Solution& solution) {
  const CoefficientTuple& c = solution.coefficients;
  json coefficients = json::array();
  for (int l = 0; l < c.k(); ++l) {
    json matrix = json::array();
    for (int i = 0; i < c.k(); ++i) {
      json row = json::array();
      for (int j = 0; j < c.k(); ++j) row.push_back(ToString(c.at(l, i, j)));
      matrix.push_back(std::move(row));
    }
    coefficients.push_back(std::move(matrix));
  }
  json document = json::object();
  document["k"] = c.k();
  document["coefficients"] = std::move(coefficients);
  if (solution.case_label) document["case"] = *solution.case_label;
  if (solution.relabeling) {
    json sources = json::array();
    json sinks = json::array();
    for (int x : solution.relabeling->sources) sources.push_back(x + 1);
    for (int x : solution.relabeling->sinks) sinks.push_back(x + 1);
    document["relabeling"] = {{"sources", sources}, {"sinks", sinks}};
  }
  return document.dump(2) + "\n";
}

Solution ParseSolution(std::string_view text) {
  json document;
  try {
    document = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("invalid JSON: ") + e.what());
  }
  if (!document.is_object() || !document.contains("k") ||
      !document["k"].is_number_integer()) {
    throw Error(ErrorCode::kParse, "solution needs an integer field 'k'");
  }
  const int k = document["k"].get<int>();
  if (k < 1) throw Error(ErrorCode::kParse, "'k' must be positive");
  const json& coefficients = document.value("coefficients", json());
  auto require_array = [k](const json& value, std::string_view what) {
    if (!value.is_array() || static_cast<int>(value.size()) != k) {
      throw Error(ErrorCode::kParse,
                  std::string(what) + " must have exactly k entries");
    }
  };
  require_array(coefficients, "coefficients");
  Solution solution;
  solution.coefficients = CoefficientTuple(k);
  for (int l = 0; l < k; ++l) {
    require_array(coefficients[l], "coefficient matrix");
    for (int i = 0; i < k; ++i) {
      require_array(coefficients[l][i], "coefficient row");
      for (int j = 0; j < k; ++j) {
        const json& x = coefficients[l][i][j];
        if (x.is_string()) {
          solution.coefficients.at(l, i, j) =
              ParseRational(x.get<std::string>());
        } else if (x.is_number_integer()) {
          solution.coefficients.at(l, i, j) = x.get<long long>();
        } else {
          throw Error(ErrorCode::kParse,
                      "coefficients must be rational strings");
        }
      }
    }
  }
  if (document.contains("case")) {
    if (!document["case"].is_string()) {
      throw Error(ErrorCode::kParse, "'case' must be a string");
    }
    solution.case_label = document["case"].get<std::string>();
  }
  if (document.contains("relabeling")) {
    const json& r = document["relabeling"];
    if (!r.is_object() || !r.contains("sources") || !r.contains("sinks")) {
      throw Error(ErrorCode::kParse,
                  "'relabeling' needs 'sources' and 'sinks'");
    }
    Relabeling relabeling{ParsePermutation(r["sources"], k, "sources"),
                          ParsePermutation(r["sinks"], k, "sinks")};
    if (!relabeling.IsValid(k)) {
      throw Error(ErrorCode::kParse, "relabeling is not a permutation");
    }
    solution.relabeling = std::move(relabeling);
  }
  return solution;
}

Solution LoadSolution(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kParse, "cannot open '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseSolution(buffer.str());
}

}  // namespace kpair

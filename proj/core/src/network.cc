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

#include "kpair/network.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "kpair/errors.h"

namespace kpair {

bool IsValidName(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
  });
}

std::vector<VertexIndex> TopologicalOrder(std::span<const std::string> names,
                                          std::span<const Arc> arcs) {
  const int n = static_cast<int>(names.size());
  std::vector<int> indegree(n, 0);
  std::vector<std::vector<VertexIndex>> succ(n);
  for (const Arc& arc : arcs) {
    ++indegree[arc.head];
    succ[arc.tail].push_back(arc.head);
  }
  auto by_name = [&](VertexIndex a, VertexIndex b) {
    return names[a] != names[b] ? names[a] < names[b] : a < b;
  };
  std::set<VertexIndex, decltype(by_name)> ready(by_name);
  for (VertexIndex v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.insert(v);
  }
  std::vector<VertexIndex> order;
  order.reserve(n);
  while (!ready.empty()) {
    VertexIndex v = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(v);
    for (VertexIndex w : succ[v]) {
      if (--indegree[w] == 0) ready.insert(w);
    }
  }
  if (static_cast<int>(order.size()) == n) return order;

  // Every leftover vertex has an in-arc from another leftover vertex, so
  // walking backwards must revisit a vertex.
  std::vector<std::vector<VertexIndex>> pred(n);
  for (const Arc& arc : arcs) pred[arc.head].push_back(arc.tail);
  VertexIndex start = -1;
  for (VertexIndex v = 0; v < n; ++v) {
    if (indegree[v] > 0 && (start < 0 || by_name(v, start))) start = v;
  }
  std::vector<int> seen_at(n, -1);
  std::vector<VertexIndex> walk;
  VertexIndex v = start;
  while (seen_at[v] < 0) {
    seen_at[v] = static_cast<int>(walk.size());
    walk.push_back(v);
    VertexIndex next = -1;
    for (VertexIndex u : pred[v]) {
      if (indegree[u] > 0 && (next < 0 || by_name(u, next))) next = u;
    }
    v = next;
  }
  std::vector<std::string> witness;
  for (int i = static_cast<int>(walk.size()) - 1; i >= seen_at[v]; --i) {
    witness.push_back(names[walk[i]]);
  }
  witness.push_back(witness.front());
  throw CycleError(std::move(witness));
}

Network::Network(int k, std::vector<std::string> vertex_names,
                 std::vector<Arc> arcs, std::vector<VertexIndex> sources,
                 std::vector<VertexIndex> sinks)
    : k_(k),
      names_(std::move(vertex_names)),
      arcs_(std::move(arcs)),
      sources_(std::move(sources)),
      sinks_(std::move(sinks)) {
  if (k_ < 1) {
    throw Error(ErrorCode::kUnknownK, "k must be a positive integer");
  }
  if (static_cast<int>(sources_.size()) != k_ ||
      static_cast<int>(sinks_.size()) != k_) {
    throw Error(ErrorCode::kInvalidArgument,
                "expected exactly k sources and k sinks");
  }
  const int n = vertex_count();
  for (VertexIndex v = 0; v < n; ++v) {
    if (!IsValidName(names_[v])) {
      throw Error(ErrorCode::kParse, "invalid vertex name '" + names_[v] + "'");
    }
    if (!vertex_lookup_.emplace(names_[v], v).second) {
      throw Error(ErrorCode::kParse, "duplicate vertex name '" + names_[v] + "'");
    }
  }
  out_.resize(n);
  in_.resize(n);
  for (ArcIndex a = 0; a < arc_count(); ++a) {
    const Arc& arc = arcs_[a];
    if (arc.tail < 0 || arc.tail >= n || arc.head < 0 || arc.head >= n) {
      throw Error(ErrorCode::kInvalidArgument, "arc endpoint out of range");
    }
    if (!IsValidName(arc.id)) {
      throw Error(ErrorCode::kParse, "invalid arc id '" + arc.id + "'");
    }
    if (!arc_lookup_.emplace(arc.id, a).second) {
      throw Error(ErrorCode::kDuplicateArcId, "duplicate arc id '" + arc.id + "'");
    }
    out_[arc.tail].push_back(a);
    in_[arc.head].push_back(a);
  }
  std::set<VertexIndex> terminals;
  for (int i = 0; i < k_; ++i) {
    for (VertexIndex v : {sources_[i], sinks_[i]}) {
      if (v < 0 || v >= n) {
        throw Error(ErrorCode::kInvalidArgument, "terminal out of range");
      }
    }
  }
  for (VertexIndex v : sources_) {
    if (!terminals.insert(v).second) {
      throw Error(ErrorCode::kParse,
                  "vertex '" + names_[v] + "' declared as two sources");
    }
  }
  for (VertexIndex v : sinks_) {
    if (!terminals.insert(v).second) {
      throw Error(ErrorCode::kParse, "vertex '" + names_[v] +
                                         "' declared twice among terminals");
    }
  }
  for (VertexIndex v : sinks_) {
    if (!out_[v].empty()) {
      throw Error(ErrorCode::kSinkHasOutArcs,
                  "sink '" + names_[v] + "' has an outgoing arc");
    }
  }
  for (VertexIndex v : sources_) {
    if (!in_[v].empty()) {
      throw Error(ErrorCode::kSourceHasInArcs,
                  "source '" + names_[v] + "' has an incoming arc");
    }
  }
  order_ = TopologicalOrder(names_, arcs_);
  rank_.assign(n, 0);
  for (int r = 0; r < n; ++r) rank_[order_[r]] = r;
}

std::optional<VertexIndex> Network::FindVertex(std::string_view name) const {
  auto it = vertex_lookup_.find(std::string(name));
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<ArcIndex> Network::FindArc(std::string_view id) const {
  auto it = arc_lookup_.find(std::string(id));
  if (it == arc_lookup_.end()) return std::nullopt;
  return it->second;
}

VertexIndex Network::VertexOrThrow(std::string_view name) const {
  if (auto v = FindVertex(name)) return *v;
  throw Error(ErrorCode::kUnknownVertex,
              "unknown vertex '" + std::string(name) + "'");
}

ArcIndex Network::ArcOrThrow(std::string_view id) const {
  if (auto a = FindArc(id)) return *a;
  throw Error(ErrorCode::kUnknownArc, "unknown arc '" + std::string(id) + "'");
}

int Network::SourceIndexOf(VertexIndex v) const {
  auto it = std::find(sources_.begin(), sources_.end(), v);
  return it == sources_.end() ? -1 : static_cast<int>(it - sources_.begin());
}

int Network::SinkIndexOf(VertexIndex v) const {
  auto it = std::find(sinks_.begin(), sinks_.end(), v);
  return it == sinks_.end() ? -1 : static_cast<int>(it - sinks_.begin());
}

bool operator==(const Network& a, const Network& b) {
  if (a.k_ != b.k_ || a.arc_count() != b.arc_count() ||
      a.vertex_count() != b.vertex_count()) {
    return false;
  }
  for (int i = 0; i < a.k_; ++i) {
    if (a.names_[a.sources_[i]] != b.names_[b.sources_[i]] ||
        a.names_[a.sinks_[i]] != b.names_[b.sinks_[i]]) {
      return false;
    }
  }
  for (ArcIndex e = 0; e < a.arc_count(); ++e) {
    const Arc& x = a.arcs_[e];
    const Arc& y = b.arcs_[e];
    if (x.id != y.id || a.names_[x.tail] != b.names_[y.tail] ||
        a.names_[x.head] != b.names_[y.head]) {
      return false;
    }
  }
  return std::set<std::string>(a.names_.begin(), a.names_.end()) ==
         std::set<std::string>(b.names_.begin(), b.names_.end());
}

NetworkBuilder::NetworkBuilder(int k) : k_(k) {
  if (k < 1) throw Error(ErrorCode::kUnknownK, "k must be a positive integer");
  sources_.resize(k);
  sinks_.resize(k);
}

VertexIndex NetworkBuilder::Intern(std::string_view name) {
  std::string key(name);
  auto [it, inserted] =
      lookup_.emplace(key, static_cast<VertexIndex>(names_.size()));
  if (inserted) names_.push_back(std::move(key));
  return it->second;
}

NetworkBuilder& NetworkBuilder::SetSource(int i, std::string_view name) {
  if (i < 0 || i >= k_) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "source index " + std::to_string(i + 1) + " out of range");
  }
  if (sources_[i]) {
    throw Error(ErrorCode::kParse,
                "source " + std::to_string(i + 1) + " declared twice");
  }
  sources_[i] = Intern(name);
  return *this;
}

NetworkBuilder& NetworkBuilder::SetSink(int j, std::string_view name) {
  if (j < 0 || j >= k_) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "sink index " + std::to_string(j + 1) + " out of range");
  }
  if (sinks_[j]) {
    throw Error(ErrorCode::kParse,
                "sink " + std::to_string(j + 1) + " declared twice");
  }
  sinks_[j] = Intern(name);
  return *this;
}

NetworkBuilder& NetworkBuilder::AddArc(std::string_view tail,
                                       std::string_view head,
                                       std::string_view id) {
  Arc arc;
  arc.tail = Intern(tail);
  arc.head = Intern(head);
  arc.id = id.empty() ? "a" + std::to_string(arcs_.size() + 1)
                      : std::string(id);
  arcs_.push_back(std::move(arc));
  return *this;
}

Network NetworkBuilder::Build() const {
  std::vector<VertexIndex> sources;
  std::vector<VertexIndex> sinks;
  for (int i = 0; i < k_; ++i) {
    if (!sources_[i]) {
      throw Error(ErrorCode::kParse,
                  "source " + std::to_string(i + 1) + " not declared");
    }
    if (!sinks_[i]) {
      throw Error(ErrorCode::kParse,
                  "sink " + std::to_string(i + 1) + " not declared");
    }
    sources.push_back(*sources_[i]);
    sinks.push_back(*sinks_[i]);
  }
  return Network(k_, names_, arcs_, std::move(sources), std::move(sinks));
}

std::vector<std::string> TopologicalOrderNames(const Network& network) {
  std::vector<std::string> names;
  for (VertexIndex v : network.topological_order()) {
    names.push_back(network.vertex_name(v));
  }
  return names;
}

namespace {

std::vector<std::string_view> Tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r')) {
      ++i;
    }
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r') {
      ++j;
    }
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

int ParseInt(std::string_view token, const std::string& where) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(),
                                   value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw Error(ErrorCode::kParse,
                where + ": expected an integer, got '" + std::string(token) +
                    "'");
  }
  return value;
}

std::string_view CheckedName(std::string_view token, const std::string& where) {
  if (!IsValidName(token)) {
    throw Error(ErrorCode::kParse,
                where + ": invalid name '" + std::string(token) + "'");
  }
  return token;
}

}  // namespace

Network ParseNetwork(std::string_view text) {
  std::optional<NetworkBuilder> builder;
  std::set<std::string> arc_ids;
  int line_number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_number;
    if (size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::vector<std::string_view> tokens = Tokenize(line);
    if (tokens.empty()) continue;
    const std::string where = "line " + std::to_string(line_number);
    const std::string_view directive = tokens[0];
    try {
      if (directive == "k") {
        if (tokens.size() != 2) {
          throw Error(ErrorCode::kParse, where + ": expected 'k <K>'");
        }
        if (builder) throw Error(ErrorCode::kParse, where + ": k declared twice");
        int k = ParseInt(tokens[1], where);
        if (k < 1) {
          throw Error(ErrorCode::kUnknownK, where + ": k must be positive");
        }
        builder.emplace(k);
      } else if (directive == "source" || directive == "sink") {
        if (tokens.size() != 3) {
          throw Error(ErrorCode::kParse, where + ": expected '" +
                                             std::string(directive) +
                                             " <index> <name>'");
        }
        if (!builder) {
          throw Error(ErrorCode::kUnknownK,
                      where + ": terminal declared before 'k'");
        }
        int index = ParseInt(tokens[1], where) - 1;
        std::string_view name = CheckedName(tokens[2], where);
        if (directive == "source") {
          builder->SetSource(index, name);
        } else {
          builder->SetSink(index, name);
        }
      } else if (directive == "arc") {
        if (tokens.size() != 3 && tokens.size() != 4) {
          throw Error(ErrorCode::kParse,
                      where + ": expected 'arc <tail> <head> [<id>]'");
        }
        if (!builder) {
          throw Error(ErrorCode::kUnknownK, where + ": arc declared before 'k'");
        }
        std::string id = tokens.size() == 4
                             ? std::string(CheckedName(tokens[3], where))
                             : "a" + std::to_string(arc_ids.size() + 1);
        if (!arc_ids.insert(id).second) {
          throw Error(ErrorCode::kDuplicateArcId,
                      where + ": duplicate arc id '" + id + "'");
        }
        builder->AddArc(CheckedName(tokens[1], where),
                        CheckedName(tokens[2], where), id);
      } else {
        throw Error(ErrorCode::kParse, where + ": unknown directive '" +
                                           std::string(directive) + "'");
      }
    } catch (const Error& e) {
      if (std::string_view(e.what()).starts_with("line ")) throw;
      throw Error(e.code(), where + ": " + e.what());
    }
  }
  if (!builder) throw Error(ErrorCode::kUnknownK, "missing 'k' declaration");
  return builder->Build();
}

Network LoadNetwork(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kParse, "cannot open '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseNetwork(buffer.str());
}

std::string SerializeNetwork(const Network& network) {
  std::ostringstream out;
  out << "k " << network.k() << '\n';
  for (int i = 0; i < network.k(); ++i) {
    out << "source " << i + 1 << ' ' << network.vertex_name(network.source(i))
        << '\n';
  }
  for (int j = 0; j < network.k(); ++j) {
    out << "sink " << j + 1 << ' ' << network.vertex_name(network.sink(j))
        << '\n';
  }
  for (const Arc& arc : network.arcs()) {
    out << "arc " << network.vertex_name(arc.tail) << ' '
        << network.vertex_name(arc.head) << ' ' << arc.id << '\n';
  }
  return out.str();
}

Normalization Normalize(const Network& network) {
  const int n = network.vertex_count();
  std::vector<bool> removable(n, false);
  for (VertexIndex v = 0; v < n; ++v) {
    removable[v] =
        network.in_arcs(v).size() == 1 && network.out_arcs(v).size() == 1;
  }
  std::vector<VertexIndex> new_index(n, -1);
  std::vector<std::string> names;
  for (VertexIndex v = 0; v < n; ++v) {
    if (removable[v]) continue;
    new_index[v] = static_cast<VertexIndex>(names.size());
    names.push_back(network.vertex_name(v));
  }
  std::vector<Arc> arcs;
  std::vector<ContractedArc> contracted;
  for (const Arc& arc : network.arcs()) {
    if (removable[arc.tail]) continue;
    ContractedArc chain{arc.id, {}, {arc.id}};
    VertexIndex head = arc.head;
    while (removable[head]) {
      chain.covered_vertices.push_back(network.vertex_name(head));
      const Arc& next = network.arc(network.out_arcs(head).front());
      chain.original_arcs.push_back(next.id);
      head = next.head;
    }
    arcs.push_back(Arc{arc.id, new_index[arc.tail], new_index[head]});
    if (!chain.covered_vertices.empty()) contracted.push_back(std::move(chain));
  }
  std::vector<VertexIndex> sources;
  std::vector<VertexIndex> sinks;
  for (int i = 0; i < network.k(); ++i) {
    sources.push_back(new_index[network.source(i)]);
    sinks.push_back(new_index[network.sink(i)]);
  }
  return Normalization{Network(network.k(), std::move(names), std::move(arcs),
                               std::move(sources), std::move(sinks)),
                       std::move(contracted)};
}

bool IsValidPath(const Network& network, const Path& path) {
  if (path.vertices.empty() || path.arcs.size() + 1 != path.vertices.size()) {
    return false;
  }
  for (VertexIndex v : path.vertices) {
    if (v < 0 || v >= network.vertex_count()) return false;
  }
  for (size_t i = 0; i < path.arcs.size(); ++i) {
    ArcIndex a = path.arcs[i];
    if (a < 0 || a >= network.arc_count()) return false;
    if (network.arc(a).tail != path.vertices[i] ||
        network.arc(a).head != path.vertices[i + 1]) {
      return false;
    }
  }
  // Arcs go forward in a DAG, so a walk never repeats a vertex.
  return true;
}

std::string FormatVertices(const Network& network,
                           std::span<const VertexIndex> vertices) {
  std::string text = "[";
  for (size_t i = 0; i < vertices.size(); ++i) {
    if (i > 0) text += ",";
    text += network.vertex_name(vertices[i]);
  }
  return text + "]";
}

std::string FormatPath(const Network& network, const Path& path) {
  return FormatVertices(network, path.vertices);
}

Path PathFromArcs(const Network& network, std::span<const ArcIndex> arcs) {
  Path path;
  if (arcs.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty arc sequence");
  }
  path.vertices.push_back(network.arc(arcs.front()).tail);
  for (ArcIndex a : arcs) {
    if (network.arc(a).tail != path.vertices.back()) {
      throw Error(ErrorCode::kInvalidArgument, "arcs do not form a path");
    }
    path.arcs.push_back(a);
    path.vertices.push_back(network.arc(a).head);
  }
  return path;
}

PathSystem::PathSystem(int k, std::vector<Path> paths)
    : k_(k), paths_(std::move(paths)) {
  if (k_ < 1 || static_cast<int>(paths_.size()) != k_ * k_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "a path system needs k*k paths");
  }
}

std::vector<Path> PathSystem::Family(int sink) const {
  std::vector<Path> family;
  for (int i = 0; i < k_; ++i) family.push_back(path(i, sink));
  return family;
}

bool FamilyIsArcDisjoint(std::span<const Path> family) {
  std::set<ArcIndex> used;
  for (const Path& p : family) {
    for (ArcIndex a : p.arcs) {
      if (!used.insert(a).second) return false;
    }
  }
  return true;
}

bool FamilyIsVertexDisjoint(std::span<const Path> family) {
  std::set<VertexIndex> used;
  for (const Path& p : family) {
    for (size_t i = 0; i + 1 < p.vertices.size(); ++i) {
      if (!used.insert(p.vertices[i]).second) return false;
    }
  }
  for (const Path& p : family) {
    if (used.count(p.back())) return false;
  }
  return true;
}

void ValidatePathSystem(const Network& network, const PathSystem& system) {
  if (system.k() != network.k()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "path system and network disagree on k");
  }
  for (int j = 0; j < network.k(); ++j) {
    for (int i = 0; i < network.k(); ++i) {
      const Path& p = system.path(i, j);
      if (!IsValidPath(network, p) || p.front() != network.source(i) ||
          p.back() != network.sink(j)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "path (" + std::to_string(i + 1) + "," +
                        std::to_string(j + 1) + ") is not a source-sink path");
      }
    }
    if (!FamilyIsArcDisjoint(system.Family(j))) {
      throw Error(ErrorCode::kInvalidArgument,
                  "paths into sink " + std::to_string(j + 1) +
                      " are not arc-disjoint");
    }
  }
}

}  // namespace kpair

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

#ifndef KPAIR_NETWORK_H_
#define KPAIR_NETWORK_H_

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace kpair {

using VertexIndex = int;
using ArcIndex = int;

struct Arc {
  std::string id;
  VertexIndex tail = 0;
  VertexIndex head = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

// A directed path given both as its vertex sequence and its arc sequence;
// `arcs.size() + 1 == vertices.size()`. Parallel arcs make the arc sequence
// necessary, the vertex sequence is kept for segment work.
struct Path {
  std::vector<VertexIndex> vertices;
  std::vector<ArcIndex> arcs;

  VertexIndex front() const { return vertices.front(); }
  VertexIndex back() const { return vertices.back(); }

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

// A k-pair network: a DAG with k labelled sources (in-degree 0) and k
// labelled sinks (out-degree 0). Source and sink indices are 0-based in the
// API and 1-based in every text format. Instances are immutable and always
// valid; the constructor throws kpair::Error otherwise.
class Network {
 public:
  Network(int k, std::vector<std::string> vertex_names, std::vector<Arc> arcs,
          std::vector<VertexIndex> sources, std::vector<VertexIndex> sinks);

  int k() const { return k_; }
  int vertex_count() const { return static_cast<int>(names_.size()); }
  int arc_count() const { return static_cast<int>(arcs_.size()); }

  const std::string& vertex_name(VertexIndex v) const { return names_[v]; }
  std::span<const std::string> vertex_names() const { return names_; }
  const Arc& arc(ArcIndex a) const { return arcs_[a]; }
  std::span<const Arc> arcs() const { return arcs_; }

  VertexIndex source(int i) const { return sources_[i]; }
  VertexIndex sink(int j) const { return sinks_[j]; }
  std::span<const VertexIndex> sources() const { return sources_; }
  std::span<const VertexIndex> sinks() const { return sinks_; }

  std::span<const ArcIndex> out_arcs(VertexIndex v) const { return out_[v]; }
  std::span<const ArcIndex> in_arcs(VertexIndex v) const { return in_[v]; }

  // Deterministic topological order, ties broken by vertex name.
  std::span<const VertexIndex> topological_order() const { return order_; }
  int topological_rank(VertexIndex v) const { return rank_[v]; }

  std::optional<VertexIndex> FindVertex(std::string_view name) const;
  std::optional<ArcIndex> FindArc(std::string_view id) const;
  VertexIndex VertexOrThrow(std::string_view name) const;
  ArcIndex ArcOrThrow(std::string_view id) const;

  // -1 if `v` is not a source (resp. sink).
  int SourceIndexOf(VertexIndex v) const;
  int SinkIndexOf(VertexIndex v) const;

  // Structural equality by names: same k, terminals, vertex set and arc list.
  friend bool operator==(const Network& a, const Network& b);

 private:
  int k_;
  std::vector<std::string> names_;
  std::vector<Arc> arcs_;
  std::vector<VertexIndex> sources_;
  std::vector<VertexIndex> sinks_;
  std::vector<std::vector<ArcIndex>> out_;
  std::vector<std::vector<ArcIndex>> in_;
  std::vector<VertexIndex> order_;
  std::vector<int> rank_;
  std::unordered_map<std::string, VertexIndex> vertex_lookup_;
  std::unordered_map<std::string, ArcIndex> arc_lookup_;
};

// Assembles a Network from names, creating vertices on first mention.
class NetworkBuilder {
 public:
  explicit NetworkBuilder(int k);

  // Indices are 0-based here.
  NetworkBuilder& SetSource(int i, std::string_view name);
  NetworkBuilder& SetSink(int j, std::string_view name);
  // An empty id means the default "a<position>" with 1-based position.
  NetworkBuilder& AddArc(std::string_view tail, std::string_view head,
                         std::string_view id = {});

  Network Build() const;

 private:
  VertexIndex Intern(std::string_view name);

  int k_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexIndex> lookup_;
  std::vector<Arc> arcs_;
  std::vector<std::optional<VertexIndex>> sources_;
  std::vector<std::optional<VertexIndex>> sinks_;
};

bool IsValidName(std::string_view name);

// Topological order of an arbitrary digraph, ties broken by name. Throws
// CycleError with a witness when the digraph has a directed cycle.
std::vector<VertexIndex> TopologicalOrder(std::span<const std::string> names,
                                          std::span<const Arc> arcs);
std::vector<std::string> TopologicalOrderNames(const Network& network);

// Text format:
//   k <K>
//   source <i> <name>
//   sink <j> <name>
//   arc <tail> <head> [<arc-id>]
// with '#' comments. Errors carry ErrorCode values that distinguish the
// failure and mention the offending line.
Network ParseNetwork(std::string_view text);
Network LoadNetwork(const std::filesystem::path& path);
std::string SerializeNetwork(const Network& network);

struct ContractedArc {
  std::string arc_id;
  std::vector<std::string> covered_vertices;
  std::vector<std::string> original_arcs;
};

struct Normalization {
  Network network;
  std::vector<ContractedArc> contracted;

  bool changed() const { return !contracted.empty(); }
};

// Contracts every maximal chain through vertices with in-degree and
// out-degree both 1 into one arc that keeps the id of the chain's first arc.
Normalization Normalize(const Network& network);

bool IsValidPath(const Network& network, const Path& path);
std::string FormatPath(const Network& network, const Path& path);
std::string FormatVertices(const Network& network,
                           std::span<const VertexIndex> vertices);
Path PathFromArcs(const Network& network, std::span<const ArcIndex> arcs);

// One chosen path per (source, sink). For each sink the k paths into it are
// pairwise arc-disjoint.
class PathSystem {
 public:
  PathSystem(int k, std::vector<Path> paths);

  int k() const { return k_; }
  const Path& path(int source, int sink) const {
    return paths_[source * k_ + sink];
  }
  std::vector<Path> Family(int sink) const;

  friend bool operator==(const PathSystem&, const PathSystem&) = default;

 private:
  int k_;
  std::vector<Path> paths_;
};

// Throws kInvalidArgument when a path does not run from source i to sink j
// or a sink's family is not arc-disjoint.
void ValidatePathSystem(const Network& network, const PathSystem& system);

bool FamilyIsArcDisjoint(std::span<const Path> family);
// Disjoint apart from the shared final vertex.
bool FamilyIsVertexDisjoint(std::span<const Path> family);

}  // namespace kpair

#endif  // KPAIR_NETWORK_H_

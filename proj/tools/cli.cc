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

#include "cli.h"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kpair/coefficients.h"
#include "kpair/errors.h"
#include "kpair/netgen.h"
#include "kpair/network.h"
#include "kpair/rational.h"
#include "kpair/reachability.h"
#include "kpair/solution_io.h"
#include "kpair/solver3.h"
#include "kpair/stability.h"
#include "kpair/structure_checks.h"
#include "kpair/topology3.h"
#include "kpair/verification.h"
#include "nlohmann/json.hpp"

namespace kpair::cli {
namespace {

using nlohmann::json;

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotStronglyReachable:
    case ErrorCode::kNotStable:
      return kExitNegative;
    case ErrorCode::kSingularCycle:
    case ErrorCode::kTheoremViolation:
    case ErrorCode::kInternal:
      return kExitInternal;
    default:
      return kExitUsage;
  }
}

struct Options {
  std::string file;
  std::string solution_file;
  std::string output;
  bool json = false;
  int max_paths = EnumerationLimits{}.max_paths_per_pair;
  int max_families = EnumerationLimits{}.max_families;
  std::string notion = "vertex";
  int k = 3;
  std::optional<std::uint64_t> seed;
  int size = GenConfig{}.target_vertex_count;
  std::string mode = "random";
  int max_attempts = GenConfig{}.max_attempts;
};

Network LoadInput(const std::string& file, std::ostream& err) {
  Normalization normalized = Normalize(LoadNetwork(file));
  for (const ContractedArc& arc : normalized.contracted) {
    std::string through;
    for (const std::string& v : arc.covered_vertices) {
      through += (through.empty() ? "" : ",") + v;
    }
    err << "warning: arc " << arc.arc_id << " now bypasses " << through
        << " (vertices with one in-arc and one out-arc are contracted)\n";
  }
  return std::move(normalized.network);
}

void WriteFile(const std::string& file, const std::string& text) {
  std::ofstream out(file, std::ios::binary);
  out << text;
  if (!out) {
    throw Error(ErrorCode::kInvalidArgument, "cannot write '" + file + "'");
  }
}

std::string SourceName(const Network& network, int i) {
  return network.vertex_name(network.source(i));
}

std::string SinkName(const Network& network, int j) {
  return network.vertex_name(network.sink(j));
}

json VertexList(const Network& network, const Path& path) {
  json names = json::array();
  for (VertexIndex v : path.vertices) names.push_back(network.vertex_name(v));
  return names;
}

json PathList(const Network& network, const std::vector<Path>& paths) {
  json list = json::array();
  for (const Path& path : paths) list.push_back(VertexList(network, path));
  return list;
}

json Digest(const Network& network) {
  return {{"k", network.k()},
          {"vertices", network.vertex_count()},
          {"arcs", network.arc_count()}};
}

void PrintDigest(const Network& network, std::ostream& out) {
  out << "network: " << network.vertex_count() << " vertices, "
      << network.arc_count() << " arcs, k = " << network.k() << "\n";
}

// Segments and paths are printed as sets, so order them by text.
std::string FormatPathSet(const Network& network,
                          const std::vector<Path>& paths) {
  std::vector<std::string> items;
  for (const Path& path : paths) items.push_back(FormatPath(network, path));
  std::sort(items.begin(), items.end());
  std::string text = "{";
  for (size_t x = 0; x < items.size(); ++x) {
    text += (x > 0 ? "," : "") + items[x];
  }
  return text + "}";
}

std::vector<VertexIndex> CycleWalk(const Network& network,
                                   const ResidualCycle& cycle) {
  std::vector<VertexIndex> walk;
  for (const ResidualStep& step : cycle) {
    const Arc& arc = network.arc(step.arc);
    walk.push_back(step.reversed ? arc.head : arc.tail);
  }
  if (!walk.empty()) walk.push_back(walk.front());
  return walk;
}

json PairSetJson(const IndexPairSet& pairs) {
  json list = json::array();
  for (const auto& [i, j] : pairs) list.push_back({i + 1, j + 1});
  return list;
}

std::string RatesText(const std::vector<Rational>& rates) {
  std::string text = "(";
  for (size_t x = 0; x < rates.size(); ++x) {
    text += (x > 0 ? "," : "") + ToString(rates[x]);
  }
  return text + ")";
}

json RelabelingJson(const Relabeling& relabeling) {
  json sources = json::array();
  json sinks = json::array();
  for (int r : relabeling.sources) sources.push_back(r + 1);
  for (int r : relabeling.sinks) sinks.push_back(r + 1);
  return {{"sources", sources}, {"sinks", sinks}};
}

json ReachabilityJson(const Network& network, const ReachabilityClass& reach) {
  json sinks = json::array();
  for (size_t j = 0; j < reach.counts.size(); ++j) {
    sinks.push_back({{"sink", SinkName(network, static_cast<int>(j))},
                     {"arc_disjoint", reach.counts[j].arc_disjoint},
                     {"vertex_disjoint", reach.counts[j].vertex_disjoint}});
  }
  return {{"level", ReachabilityLevelName(reach.level)}, {"sinks", sinks}};
}

void PrintReachability(const Network& network, const ReachabilityClass& reach,
                       std::ostream& out) {
  out << "reachability: " << ReachabilityLevelName(reach.level) << "\n";
  for (size_t j = 0; j < reach.counts.size(); ++j) {
    out << "  " << SinkName(network, static_cast<int>(j)) << ": "
        << reach.counts[j].arc_disjoint << " arc-disjoint, "
        << reach.counts[j].vertex_disjoint << " vertex-disjoint paths\n";
  }
}

json VerdictJson(const Network& network, const StabilityVerdict& verdict) {
  json result = {{"stable", verdict.stable},
                 {"reason", StabilityReasonName(verdict.reason)}};
  result["failing_sink"] =
      verdict.failing_sink ? json(SinkName(network, *verdict.failing_sink))
                           : json(nullptr);
  if (verdict.witness) {
    const StabilityWitness& w = *verdict.witness;
    json witness = {{"sink", SinkName(network, w.sink)},
                    {"family", PathList(network, w.family)},
                    {"alternative", PathList(network, w.alternative)}};
    if (!w.cycle.empty()) {
      json cycle = json::array();
      for (VertexIndex v : CycleWalk(network, w.cycle)) {
        cycle.push_back(network.vertex_name(v));
      }
      witness["cycle"] = cycle;
      witness["semicycle"] = PathList(network, w.semicycle.segments);
      witness["crossing"] = PathList(network, w.crossing);
    }
    result["witness"] = witness;
  } else {
    result["witness"] = nullptr;
  }
  return result;
}

void PrintVerdict(const Network& network, const StabilityVerdict& verdict,
                  std::ostream& out) {
  if (verdict.stable) {
    out << "verdict: stable\n";
    return;
  }
  out << "verdict: unstable (" << StabilityReasonName(verdict.reason) << ")\n";
  if (verdict.failing_sink) {
    out << "failing sink: " << SinkName(network, *verdict.failing_sink)
        << "\n";
  }
  if (!verdict.witness) return;
  const StabilityWitness& w = *verdict.witness;
  out << "sink: " << SinkName(network, w.sink) << "\n";
  if (!w.cycle.empty()) {
    out << "residual cycle: "
        << FormatVertices(network, CycleWalk(network, w.cycle)) << "\n";
    out << "semi-cycle: " << FormatPathSet(network, w.semicycle.segments)
        << "\n";
    out << "crossing: " << FormatPathSet(network, w.crossing) << "\n";
  }
  out << "family: " << FormatPathSet(network, w.family) << "\n";
  out << "alternative: " << FormatPathSet(network, w.alternative) << "\n";
}

int RunCheck(const Options& options, std::ostream& out, std::ostream& err) {
  const Network network = LoadInput(options.file, err);
  const StabilityVerdict verdict = CheckStability(network);
  std::optional<PathSystem> system;
  if (verdict.stable) system = ExtractPathSystem(network);
  if (options.json) {
    json report = {{"command", "check"},
                   {"file", options.file},
                   {"network", Digest(network)},
                   {"reachability",
                    ReachabilityJson(network, verdict.reachability)}};
    report.update(VerdictJson(network, verdict));
    json paths = json::array();
    if (system) {
      for (int i = 0; i < network.k(); ++i) {
        for (int j = 0; j < network.k(); ++j) {
          paths.push_back({{"source", SourceName(network, i)},
                           {"sink", SinkName(network, j)},
                           {"vertices", VertexList(network, system->path(i, j))}});
        }
      }
    }
    report["paths"] = paths;
    out << report.dump(2) << "\n";
  } else {
    PrintDigest(network, out);
    PrintReachability(network, verdict.reachability, out);
    PrintVerdict(network, verdict, out);
    if (system) {
      out << "paths:\n";
      for (int i = 0; i < network.k(); ++i) {
        for (int j = 0; j < network.k(); ++j) {
          out << "  P(" << SourceName(network, i) << "," << SinkName(network, j)
              << ") = " << FormatPath(network, system->path(i, j)) << "\n";
        }
      }
    }
  }
  return verdict.stable ? kExitOk : kExitNegative;
}

void RequireThreePairs(const Network& network, std::string_view command) {
  if (network.k() != 3) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(command) + " needs a 3-pair network, got k = " +
                    std::to_string(network.k()));
  }
}

int RunClassify(const Options& options, std::ostream& out, std::ostream& err) {
  const Network network = LoadInput(options.file, err);
  RequireThreePairs(network, "classify");
  const StabilityVerdict verdict = CheckStability(network);
  if (!verdict.stable) {
    if (options.json) {
      json report = {{"command", "classify"},
                     {"file", options.file},
                     {"network", Digest(network)}};
      report.update(VerdictJson(network, verdict));
      out << report.dump(2) << "\n";
    } else {
      PrintDigest(network, out);
      PrintVerdict(network, verdict, out);
    }
    return kExitNegative;
  }
  const PathSystem system = ExtractPathSystem(network);
  const MSets msets = ComputeMSets(system);
  std::vector<PairwiseShape> shapes;
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) shapes.push_back(ClassifyPair(system, a, b));
  }
  const std::optional<ForbiddenStructure> forbidden =
      DetectForbiddenStructure(system);
  const SNCatalog catalog = ComputeSN(network, system);
  const CaseDecision decision = DispatchCase(msets, catalog);

  std::vector<std::string> violations;
  for (auto check : {CheckNoDoubleVisit, CheckSingleSegmentPairs,
                     CheckNonDegenerateAttachment}) {
    for (std::string& v : check(system)) violations.push_back(std::move(v));
  }
  for (auto check :
       {CheckSharedSourceExclusion, CheckEntriesNeedCommonSegments}) {
    for (std::string& v : check(system, catalog)) {
      violations.push_back(std::move(v));
    }
  }
  if (forbidden) violations.push_back("forbidden structure present");

  if (options.json) {
    json m = json::array();
    for (int own = 0; own < 3; ++own) {
      for (int other = 0; other < 3; ++other) {
        if (own == other) continue;
        json members = json::array();
        for (int x = 0; x < 3; ++x) {
          if (Contains(msets.get(own, other), x)) members.push_back(x + 1);
        }
        m.push_back({{"own", own + 1}, {"other", other + 1}, {"set", members}});
      }
    }
    json pairs = json::array();
    for (const PairwiseShape& shape : shapes) {
      json entry = {{"sinks", {shape.sink_a + 1, shape.sink_b + 1}},
                    {"shape", ShapeKindName(shape.kind)},
                    {"degenerate", shape.degenerate()}};
      if (!shape.degenerate()) {
        entry["type"] = shape.flow_type;
        entry["roles"] = {{"i", shape.i + 1}, {"j", shape.j + 1},
                          {"l", shape.l + 1}};
      }
      pairs.push_back(entry);
    }
    json sn = json::array();
    for (const SNEntry& entry : catalog.entries) {
      json arcs = json::array();
      for (ArcIndex a : entry.arcs) arcs.push_back(network.arc(a).id);
      sn.push_back({{"pairs", PairSetJson(entry.pairs)}, {"arcs", arcs}});
    }
    json report = {
        {"command", "classify"},
        {"file", options.file},
        {"network", Digest(network)},
        {"stable", true},
        {"msets", m},
        {"pairs", pairs},
        {"forbidden_structure",
         forbidden ? json({{"i", forbidden->i + 1},
                           {"j", forbidden->j + 1},
                           {"l", forbidden->l + 1}})
                   : json(nullptr)},
        {"sn", sn},
        {"case",
         {{"label", CaseLabelName(decision.label)},
          {"i", decision.i + 1},
          {"j", decision.j + 1},
          {"l", decision.l + 1},
          {"relabeling", RelabelingJson(decision.relabeling)}}},
        {"violations", violations}};
    out << report.dump(2) << "\n";
  } else {
    PrintDigest(network, out);
    out << "verdict: stable\nm-sets:\n";
    for (int own = 0; own < 3; ++own) {
      for (int other = 0; other < 3; ++other) {
        if (own == other) continue;
        out << "  m(" << own + 1 << "," << other + 1
            << ") = " << FormatIndexSet(msets.get(own, other)) << "\n";
      }
    }
    out << "sink pairs:\n";
    for (const PairwiseShape& shape : shapes) {
      out << "  " << SinkName(network, shape.sink_a) << ","
          << SinkName(network, shape.sink_b) << ": "
          << ShapeKindName(shape.kind);
      if (!shape.degenerate()) {
        out << ", type " << shape.flow_type << " (i=" << shape.i + 1
            << ", j=" << shape.j + 1 << ", l=" << shape.l + 1 << ")";
      }
      out << "\n";
    }
    out << "forbidden structure: " << (forbidden ? "present" : "none") << "\n";
    out << "S_N: " << catalog.entries.size() << " entries\n";
    for (const SNEntry& entry : catalog.entries) {
      out << "  " << FormatPairSet(entry.pairs) << ":";
      for (ArcIndex a : entry.arcs) out << " " << network.arc(a).id;
      out << "\n";
    }
    out << "case: " << CaseLabelName(decision.label) << " (i=" << decision.i + 1
        << ", j=" << decision.j + 1 << ", l=" << decision.l + 1 << ")\n";
    for (const std::string& v : violations) out << "violation: " << v << "\n";
  }
  return violations.empty() ? kExitOk : kExitInternal;
}

int RunSolve(const Options& options, std::ostream& out, std::ostream& err) {
  const Network network = LoadInput(options.file, err);
  RequireThreePairs(network, "solve");
  std::optional<SolveResult> solved;
  try {
    solved = Solve(network);
  } catch (const NotStableError& e) {
    err << "not solvable: unstable ("
        << StabilityReasonName(e.verdict().reason) << ")\n";
    return kExitNegative;
  }
  const SolveResult& result = *solved;
  for (const std::string& d : result.diagnostics) err << "note: " << d << "\n";
  Solution solution;
  solution.coefficients = result.tuple;
  solution.case_label = std::string(CaseLabelName(result.decision.label));
  solution.relabeling = result.decision.relabeling;
  const std::string text = SerializeSolution(solution);
  if (options.output.empty()) {
    out << text;
  } else {
    WriteFile(options.output, text);
    out << "case: " << *solution.case_label << "\n"
        << "verification: "
        << (result.report.overloaded.empty() ? "feasible" : "infeasible")
        << ", rate " << RatesText(result.report.rates) << ", max load "
        << ToString(result.report.max_load) << "\n"
        << "wrote " << options.output << "\n";
  }
  return result.report.verdict ? kExitOk : kExitInternal;
}

int RunVerify(const Options& options, std::ostream& out, std::ostream& err) {
  const Network network = LoadInput(options.file, err);
  const Solution solution = LoadSolution(options.solution_file);
  if (solution.coefficients.k() != network.k()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "solution has k = " + std::to_string(solution.coefficients.k()) +
                    " but the network has k = " + std::to_string(network.k()));
  }
  const PathSystem system = ExtractPathSystem(network);
  const VerificationReport report =
      VerifySolution(network, system, solution.coefficients);
  const std::string summary =
      std::string(report.overloaded.empty() ? "feasible" : "infeasible") +
      ", rate " + RatesText(report.rates);
  if (options.json) {
    json loads = json::array();
    for (const ArcLoad& load : report.loads) {
      const Arc& arc = network.arc(load.arc);
      loads.push_back({{"arc", arc.id},
                       {"tail", network.vertex_name(arc.tail)},
                       {"head", network.vertex_name(arc.head)},
                       {"pairs", PairSetJson(load.pairs)},
                       {"load", ToString(load.load)}});
    }
    json g = json::array();
    for (const GsValue& value : report.g_values) {
      g.push_back({{"pairs", PairSetJson(value.pairs)},
                   {"value", ToString(value.value)}});
    }
    json rates = json::array();
    for (const Rational& r : report.rates) rates.push_back(ToString(r));
    json overloaded = json::array();
    for (ArcIndex a : report.overloaded) overloaded.push_back(network.arc(a).id);
    json report_json = {
        {"command", "verify"},
        {"file", options.file},
        {"solution", options.solution_file},
        {"network", Digest(network)},
        {"rate_conditions",
         {{"ok", report.rate_check.ok},
          {"violations", report.rate_check.violations}}},
        {"rates", rates},
        {"conservation", report.conservation},
        {"loads", loads},
        {"max_load", ToString(report.max_load)},
        {"g_values", g},
        {"max_g", ToString(report.max_g)},
        {"overloaded", overloaded},
        {"verdict", report.verdict},
        {"summary", summary}};
    out << report_json.dump(2) << "\n";
  } else {
    PrintDigest(network, out);
    out << "rate conditions: " << (report.rate_check.ok ? "ok" : "violated")
        << "\n";
    for (const std::string& v : report.rate_check.violations) {
      out << "  " << v << "\n";
    }
    out << "conservation: " << (report.conservation ? "ok" : "violated")
        << "\n";
    out << "loads:\n";
    for (const ArcLoad& load : report.loads) {
      const Arc& arc = network.arc(load.arc);
      out << "  " << arc.id << " [" << network.vertex_name(arc.tail) << ","
          << network.vertex_name(arc.head) << "] "
          << FormatPairSet(load.pairs) << " " << ToString(load.load) << "\n";
    }
    out << "max load: " << ToString(report.max_load) << "\n";
    out << "max g_s: " << ToString(report.max_g) << "\n";
    out << "verdict: " << summary << "\n";
  }
  return report.verdict ? kExitOk : kExitNegative;
}

int RunOracle(const Options& options, std::ostream& out, std::ostream& err) {
  const Network network = LoadInput(options.file, err);
  const OracleNotion notion =
      options.notion == "arc" ? OracleNotion::kArc : OracleNotion::kVertex;
  EnumerationLimits limits;
  limits.max_paths_per_pair = options.max_paths;
  limits.max_families = options.max_families;
  const StabilityVerdict verdict = OracleStability(network, notion, limits);
  if (options.json) {
    json report = {{"command", "oracle"},
                   {"file", options.file},
                   {"notion", OracleNotionName(notion)},
                   {"network", Digest(network)}};
    report.update(VerdictJson(network, verdict));
    out << report.dump(2) << "\n";
  } else {
    PrintDigest(network, out);
    out << "notion: " << OracleNotionName(notion) << "\n";
    PrintVerdict(network, verdict, out);
  }
  return verdict.stable ? kExitOk : kExitNegative;
}

int RunGen(const Options& options, std::ostream& out, std::ostream& err) {
  GenConfig config;
  config.k = options.k;
  config.seed = *options.seed;
  config.target_vertex_count = options.size;
  config.mode = *ParseGenMode(options.mode);
  config.max_attempts = options.max_attempts;
  const Generated generated = Generate(config);
  const std::string text = SerializeNetwork(generated.network);
  if (options.output.empty()) {
    out << text;
  } else {
    WriteFile(options.output, text);
  }
  err << "generated " << generated.template_name << " network with "
      << generated.network.vertex_count() << " vertices after "
      << generated.attempts << " attempts\n";
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Analyze and solve k-pair networks.", "kpair"};
  app.require_subcommand(1);
  Options options;

  auto* check = app.add_subcommand(
      "check", "Reachability class and stability verdict with a witness.");
  check->add_option("file", options.file, "Network file")->required();
  check->add_flag("--json", options.json, "Print a JSON report");

  auto* classify = app.add_subcommand(
      "classify", "m-sets, sink-pair shapes and solver case of a stable "
                  "3-pair network.");
  classify->add_option("file", options.file, "Network file")->required();
  classify->add_flag("--json", options.json, "Print a JSON report");

  auto* solve = app.add_subcommand(
      "solve", "Linear routing solution of a stable 3-pair network.");
  solve->add_option("file", options.file, "Network file")->required();
  solve->add_option("-o,--output", options.output,
                    "Write the solution JSON here instead of stdout");

  auto* verify =
      app.add_subcommand("verify", "Check a solution against a network.");
  verify->add_option("file", options.file, "Network file")->required();
  verify->add_option("solution", options.solution_file, "Solution JSON")
      ->required();
  verify->add_flag("--json", options.json, "Print a JSON report");

  auto* oracle = app.add_subcommand(
      "oracle", "Stability by exhaustive path-family enumeration.");
  oracle->add_option("file", options.file, "Network file")->required();
  oracle->add_option("--max-paths", options.max_paths,
                     "Path bound per source-sink pair")
      ->check(CLI::PositiveNumber);
  oracle->add_option("--max-families", options.max_families,
                     "Family bound per sink")
      ->check(CLI::PositiveNumber);
  oracle->add_option("--notion", options.notion,
                     "Family notion: vertex or arc")
      ->check(CLI::IsMember({"vertex", "arc"}));
  oracle->add_flag("--json", options.json, "Print a JSON report");

  auto* gen = app.add_subcommand("gen", "Generate a seeded test network.");
  gen->add_option("--k", options.k, "Number of pairs")
      ->check(CLI::PositiveNumber);
  gen->add_option("--seed", options.seed, "Random seed")->required();
  gen->add_option("--size", options.size, "Target vertex count")
      ->check(CLI::PositiveNumber);
  gen->add_option("--mode", options.mode, "random, stable3 or unstable3")
      ->check(CLI::IsMember({"random", "stable3", "unstable3"}));
  gen->add_option("--max-attempts", options.max_attempts,
                  "Rejection-sampling budget")
      ->check(CLI::PositiveNumber);
  gen->add_option("-o,--output", options.output,
                  "Write the network here instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (check->parsed()) return RunCheck(options, out, err);
    if (classify->parsed()) return RunClassify(options, out, err);
    if (solve->parsed()) return RunSolve(options, out, err);
    if (verify->parsed()) return RunVerify(options, out, err);
    if (oracle->parsed()) return RunOracle(options, out, err);
    if (gen->parsed()) return RunGen(options, out, err);
  } catch (const TheoremViolation& e) {
    err << "theorem violation: " << e.what() << "\n";
    for (const std::string& d : e.diagnostics()) err << "  " << d << "\n";
    return kExitInternal;
  } catch (const Error& e) {
    err << "error (" << ErrorCodeName(e.code()) << "): " << e.what() << "\n";
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace kpair::cli

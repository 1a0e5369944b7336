#include "rembed/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <sstream>

namespace rembed {

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

namespace {

using nlohmann::json;

json real(double x) { return std::strtod(format_real(x).c_str(), nullptr); }

std::string_view kind_name(BoundCheck::Kind k) {
  switch (k) {
    case BoundCheck::Kind::upper: return "upper";
    case BoundCheck::Kind::strict_upper: return "strict_upper";
    case BoundCheck::Kind::lower: return "lower";
    case BoundCheck::Kind::equality: return "equality";
    case BoundCheck::Kind::info: return "info";
  }
  return "?";
}

std::string bound_value(const BoundCheck& b) { return b.exact ? to_string(*b.exact) : format_real(b.value); }

json distribution(const std::map<int, BigInt>& dist, const char* key) {
  json arr = json::array();
  for (const auto& [k, count] : dist) arr.push_back({{key, k}, {"count", count.str()}});
  return arr;
}

}  // namespace

json to_json(const ExactStats& s) {
  return {{"graph", s.graph_id},
          {"vertices", s.vertex_count},
          {"edges", s.edge_count},
          {"total_embeddings", s.total_embeddings.str()},
          {"expected_faces", to_string(s.expected_faces)},
          {"expected_faces_real", real(to_double(s.expected_faces))},
          {"face_distribution", distribution(s.face_distribution, "faces")},
          {"genus_distribution", distribution(s.genus_distribution, "genus")}};
}

json to_json(const McEstimate& e, const std::string& graph_id) {
  return {{"graph", graph_id},
          {"mean", real(e.mean)},
          {"std_error", real(e.std_error)},
          {"ci95", {real(e.ci_lo), real(e.ci_hi)}},
          {"trials", e.trials},
          {"seed", e.seed},
          {"strategy", std::string(to_string(e.strategy))}};
}

json to_json(const BoundsReport& r) {
  json value;
  if (r.exact_value) {
    value = {{"kind", "exact"},
             {"expected_faces", to_string(*r.exact_value)},
             {"expected_faces_real", real(to_double(*r.exact_value))}};
  } else if (r.estimate) {
    value = to_json(*r.estimate, r.graph_id);
    value["kind"] = "monte_carlo";
  }
  json bounds = json::array();
  for (const auto& b : r.bounds) {
    bounds.push_back({{"name", b.name},
                      {"kind", std::string(kind_name(b.kind))},
                      {"value", bound_value(b)},
                      {"value_real", real(b.value)},
                      {"satisfied", b.satisfied},
                      {"hard", b.hard}});
  }
  return {{"graph", r.graph_id}, {"n", r.n},           {"edges", r.edges},
          {"mu", r.mu},          {"mu_at", r.mu_at},   {"value", value},
          {"bounds", bounds},    {"hard_violation", r.hard_violation()}};
}

json to_json(const ProcessTrace& t) {
  json placements = json::array();
  for (const auto& [a, b] : t.placements) placements.push_back({a, b});
  return {{"strategy", std::string(to_string(t.strategy))},
          {"seed", t.seed},
          {"edge_order", t.edge_order},
          {"placements", placements},
          {"closures", t.closures_per_edge},
          {"faces", t.final_faces},
          {"rotation", format_rotation(t.final_rotation)}};
}

std::string to_csv(const ExactStats& s) {
  std::ostringstream out;
  out << "# rembed exact v1: graph,faces,count,expected_faces\n";
  for (const auto& [f, count] : s.face_distribution) {
    out << s.graph_id << ',' << f << ',' << count.str() << ',' << to_string(s.expected_faces) << '\n';
  }
  return out.str();
}

std::string to_csv(const McEstimate& e, const std::string& graph_id) {
  std::ostringstream out;
  out << "# rembed estimate v1: graph,strategy,trials,seed,mean,std_error,ci95_lo,ci95_hi\n";
  out << graph_id << ',' << to_string(e.strategy) << ',' << e.trials << ',' << e.seed << ','
      << format_real(e.mean) << ',' << format_real(e.std_error) << ',' << format_real(e.ci_lo) << ','
      << format_real(e.ci_hi) << '\n';
  return out.str();
}

std::string to_csv(const BoundsReport& r) {
  std::ostringstream out;
  out << "# rembed bounds v1: graph,observed,bound,kind,value,value_real,satisfied,hard\n";
  std::string observed = r.exact_value ? to_string(*r.exact_value)
                                       : (r.estimate ? format_real(r.estimate->mean) : std::string{});
  for (const auto& b : r.bounds) {
    out << r.graph_id << ',' << observed << ',' << b.name << ',' << kind_name(b.kind) << ','
        << bound_value(b) << ',' << format_real(b.value) << ',' << (b.satisfied ? "true" : "false") << ','
        << (b.hard ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string to_table(const ExactStats& s) {
  std::ostringstream out;
  out << "graph             " << s.graph_id << '\n'
      << "vertices / edges  " << s.vertex_count << " / " << s.edge_count << '\n'
      << "embeddings        " << s.total_embeddings.str() << '\n'
      << "E[F]              " << to_string(s.expected_faces) << "  (" << format_real(to_double(s.expected_faces))
      << ")\n\n"
      << std::setw(8) << "faces" << "  count\n";
  for (const auto& [f, count] : s.face_distribution) out << std::setw(8) << f << "  " << count.str() << '\n';
  out << '\n' << std::setw(8) << "genus" << "  count\n";
  for (const auto& [g, count] : s.genus_distribution) out << std::setw(8) << g << "  " << count.str() << '\n';
  return out.str();
}

std::string to_table(const McEstimate& e, const std::string& graph_id) {
  std::ostringstream out;
  out << "graph      " << graph_id << '\n'
      << "strategy   " << to_string(e.strategy) << '\n'
      << "trials     " << e.trials << '\n'
      << "seed       " << e.seed << '\n'
      << "mean       " << format_real(e.mean) << '\n'
      << "std error  " << format_real(e.std_error) << '\n'
      << "95% CI     [" << format_real(e.ci_lo) << ", " << format_real(e.ci_hi) << "]\n";
  return out.str();
}

std::string to_table(const BoundsReport& r) {
  std::ostringstream out;
  out << "graph " << r.graph_id << "  n=" << r.n << " |E|=" << r.edges << " mu=" << r.mu << '\n';
  if (r.exact_value) {
    out << "E[F] exact " << to_string(*r.exact_value) << " (" << format_real(to_double(*r.exact_value)) << ")\n";
  } else if (r.estimate) {
    out << "E[F] estimate " << format_real(r.estimate->mean) << " +- " << format_real(r.estimate->std_error)
        << " (" << r.estimate->trials << " trials)\n";
  }
  out << '\n'
      << std::left << std::setw(11) << "bound" << std::setw(14) << "kind" << std::setw(22) << "value"
      << std::setw(11) << "satisfied" << "hard\n";
  for (const auto& b : r.bounds) {
    out << std::setw(11) << b.name << std::setw(14) << kind_name(b.kind) << std::setw(22) << bound_value(b)
        << std::setw(11) << (b.satisfied ? "yes" : "NO") << (b.hard ? "yes" : "no") << '\n';
  }
  return out.str();
}

json to_json(const AuditSummary& summary, const std::string& graph_id, std::uint64_t trials,
               std::uint64_t seed) {
  json strategies = json::object();
  for (const auto& sa : summary.strategies) {
    json checks = json::object();
    for (std::size_t c = 0; c < AuditCounts::kNames.size(); ++c) {
      checks[std::string(AuditCounts::kNames[c])] = {{"passed", sa.counts.passed[c]},
                                                     {"failed", sa.counts.failed[c]}};
    }
    strategies[std::string(to_string(sa.strategy))] = {{"runs", sa.runs}, {"checks", checks}};
  }
  json witness = nullptr;
  if (summary.witness) {
    witness = {{"strategy", std::string(to_string(summary.witness->strategy))},
               {"run", summary.witness->run},
               {"failures", summary.witness->failures},
               {"trace", to_json(summary.witness->trace)}};
  }
  return {{"graph", graph_id}, {"trials", trials},       {"seed", seed},
          {"ok", summary.ok()}, {"strategies", strategies}, {"witness", witness}};
}

std::string to_csv(const AuditSummary& summary, const std::string& graph_id) {
  std::ostringstream out;
  out << "# rembed verify v1: graph,strategy,check,passed,failed\n";
  for (const auto& sa : summary.strategies) {
    for (std::size_t c = 0; c < AuditCounts::kNames.size(); ++c) {
      out << graph_id << ',' << to_string(sa.strategy) << ',' << AuditCounts::kNames[c] << ','
          << sa.counts.passed[c] << ',' << sa.counts.failed[c] << '\n';
    }
  }
  return out.str();
}

std::string to_table(const AuditSummary& summary, const std::string& graph_id) {
  std::ostringstream out;
  out << "graph " << graph_id << (summary.ok() ? "  all checks passed" : "  FAILURES") << "\n\n";
  out << std::left << std::setw(10) << "strategy" << std::setw(18) << "check" << std::setw(12) << "passed"
      << "failed\n";
  for (const auto& sa : summary.strategies) {
    for (std::size_t c = 0; c < AuditCounts::kNames.size(); ++c) {
      out << std::setw(10) << to_string(sa.strategy) << std::setw(18) << AuditCounts::kNames[c]
          << std::setw(12) << sa.counts.passed[c] << sa.counts.failed[c] << '\n';
    }
  }
  if (summary.witness) {
    out << "\nfirst failing run: " << to_string(summary.witness->strategy) << " #" << summary.witness->run
        << '\n';
    for (const auto& f : summary.witness->failures) out << "  " << f << '\n';
  }
  return out.str();
}

}  // namespace rembed

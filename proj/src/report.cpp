#include "scd/report.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "scd/obstructions.hpp"

namespace scd {

namespace {

json spec_to_json(const FamilySpec& s) {
  json j;
  j["family"] = family_name(s.id);
  j["length"] = s.length;
  j["n"] = s.n;
  j["i"] = s.i;
  j["k"] = s.k;
  j["loop_set"] = s.loop_set;
  j["loopless_rim"] = s.loopless_rim;
  json m = json::array();
  for (auto [a, b] : s.matching) m.push_back(json::array({a, b}));
  j["matching"] = m;
  return j;
}

FamilySpec spec_from_json(const json& j) {
  FamilySpec s;
  auto id = family_from_name(j.at("family").get<std::string>());
  if (!id) throw input_error("unknown family in certificate: " + j.at("family").dump());
  s.id = *id;
  s.length = j.at("length").get<int>();
  s.n = j.at("n").get<int>();
  s.i = j.at("i").get<int>();
  s.k = j.at("k").get<int>();
  s.loop_set = j.at("loop_set").get<std::vector<int>>();
  s.loopless_rim = j.at("loopless_rim").get<std::vector<int>>();
  for (const auto& pair : j.at("matching"))
    s.matching.emplace_back(pair.at(0).get<int>(), pair.at(1).get<int>());
  return s;
}

} // namespace

json certificate_to_json(const Certificate& c) {
  json j;
  if (const auto* so = std::get_if<StrongOrderingCert>(&c)) {
    j["type"] = "strong_ordering";
    j["order"] = so->ordering.order;
  } else if (const auto* ob = std::get_if<ObstructionCert>(&c)) {
    j["type"] = "obstruction";
    j["spec"] = spec_to_json(ob->spec);
    j["embedding"] = ob->embedding;
  } else if (const auto* bw = std::get_if<BadWalkCert>(&c)) {
    j["type"] = "bad_walk";
    j["vertices"] = bw->walk.vertices;
    j["closed"] = bw->walk.closed;
  } else {
    j["type"] = "unwitnessed";
    j["reason"] = std::get<UnwitnessedCert>(c).reason;
  }
  return j;
}

Certificate certificate_from_json(const json& j) {
  std::string type = j.at("type").get<std::string>();
  if (type == "strong_ordering")
    return StrongOrderingCert{VertexOrdering{j.at("order").get<std::vector<int>>()}};
  if (type == "obstruction")
    return ObstructionCert{spec_from_json(j.at("spec")),
                           j.at("embedding").get<std::vector<int>>()};
  if (type == "bad_walk") {
    Walk w;
    w.vertices = j.at("vertices").get<std::vector<int>>();
    w.closed = j.at("closed").get<bool>();
    return BadWalkCert{w};
  }
  if (type == "unwitnessed") return UnwitnessedCert{j.at("reason").get<std::string>()};
  throw input_error("unknown certificate type: " + type);
}

json report_to_json(const RunReport& r) {
  json j;
  j["format_version"] = 1;
  j["command"] = r.command;
  j["input"] = {{"n", r.n}, {"arcs", r.arcs}, {"loops", r.loops},
                {"detected_class", r.detected_class}};
  j["verdict"] = r.verdict;
  if (r.certificate) j["certificate"] = certificate_to_json(*r.certificate);
  if (!r.note.empty()) j["note"] = r.note;
  if (r.domination_size) {
    j["domination"] = {{"size", *r.domination_size},
                       {"D", r.dominating_set},
                       {"C", r.disjoint_set}};
  }
  if (r.totally_balanced) j["totally_balanced"] = *r.totally_balanced;
  j["wall_ms"] = r.wall_ms;
  return j;
}

std::string describe_input(const Digraph& d) {
  std::ostringstream os;
  os << d.n() << " vertices, " << (d.arc_count() - d.loop_count()) << " arcs, "
     << d.loop_count() << " loops";
  return os.str();
}

void print_human(std::ostream& out, const RunReport& r) {
  out << r.command << ": n=" << r.n << " arcs=" << r.arcs << " loops=" << r.loops
      << " class=" << r.detected_class << "\n";
  out << "verdict: " << r.verdict << "\n";
  if (r.certificate) {
    const Certificate& c = *r.certificate;
    if (const auto* so = std::get_if<StrongOrderingCert>(&c)) {
      out << "strong ordering:";
      for (int v : so->ordering.order) out << ' ' << v;
      out << "\n";
    } else if (const auto* ob = std::get_if<ObstructionCert>(&c)) {
      out << "obstruction: " << to_string(ob->spec) << " at vertices";
      for (int v : ob->embedding) out << ' ' << v;
      out << "\n";
    } else if (const auto* bw = std::get_if<BadWalkCert>(&c)) {
      out << "chordless even closed walk:";
      for (int v : bw->walk.vertices) out << ' ' << v;
      out << "\n";
    } else {
      out << "note: " << std::get<UnwitnessedCert>(c).reason << "\n";
    }
  }
  if (!r.note.empty()) out << "note: " << r.note << "\n";
  if (r.domination_size) {
    out << "|D| = " << *r.domination_size << "\nD =";
    for (int v : r.dominating_set) out << ' ' << v;
    out << "\nC =";
    for (int v : r.disjoint_set) out << ' ' << v;
    out << "\n";
  }
  if (r.totally_balanced)
    out << "totally balanced: " << (*r.totally_balanced ? "yes" : "no") << "\n";
}

void write_dot(std::ostream& out, const Digraph& d, const Certificate& c) {
  auto emit_subgraph = [&](const std::vector<int>& verts) {
    out << "digraph certificate {\n";
    for (int v : verts)
      out << "  " << v << (d.has_loop(v) ? " [style=bold]" : "") << ";\n";
    for (int u : verts)
      for (int v : verts)
        if (d.arc(u, v)) out << "  " << u << " -> " << v << ";\n";
    out << "}\n";
  };
  if (const auto* so = std::get_if<StrongOrderingCert>(&c)) {
    out << "digraph certificate {\n";
    for (size_t i = 0; i < so->ordering.order.size(); ++i)
      out << "  " << so->ordering.order[i] << " [label=\"" << so->ordering.order[i] << " (#"
          << i << ")\"];\n";
    for (int u = 0; u < d.n(); ++u)
      for (int v = d.out_row(u).first(); v != -1; v = d.out_row(u).next(v))
        out << "  " << u << " -> " << v << ";\n";
    out << "}\n";
  } else if (const auto* ob = std::get_if<ObstructionCert>(&c)) {
    emit_subgraph(ob->embedding);
  } else if (const auto* bw = std::get_if<BadWalkCert>(&c)) {
    std::vector<int> verts = bw->walk.vertices;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    emit_subgraph(verts);
  } else {
    out << "digraph certificate {\n}\n";
  }
}

} // namespace scd

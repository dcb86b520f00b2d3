#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "scd/certificates.hpp"
#include "scd/digraph.hpp"

namespace scd {

using json = nlohmann::ordered_json;

/// One run of a CLI command: input digest, verdict, certificate, timing.
struct RunReport {
  std::string command;
  int n = 0, arcs = 0, loops = 0;
  std::string detected_class;  // symmetric | tournament | balanced | general
  std::string verdict;         // strongly-chordal | not-strongly-chordal | undecided | error
  std::optional<Certificate> certificate;
  double wall_ms = 0.0;
  std::string note;

  // command-specific extras
  std::optional<int> domination_size;
  std::vector<int> dominating_set;
  std::vector<int> disjoint_set;
  std::optional<bool> totally_balanced;
};

json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const json& j);

json report_to_json(const RunReport& r);

void print_human(std::ostream& out, const RunReport& r);

/// Certificate subgraph in DOT, loops drawn as self-edges. Strong orderings
/// render the whole graph with position labels; obstructions and walks
/// render the witness subgraph.
void write_dot(std::ostream& out, const Digraph& d, const Certificate& c);

std::string describe_input(const Digraph& d);

} // namespace scd

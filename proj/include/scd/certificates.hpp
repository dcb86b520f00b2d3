#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "scd/digraph.hpp"
#include "scd/gamma.hpp"

namespace scd {

/// Walk in a graph with possible loops. Consecutive vertices must be
/// adjacent (a repeated vertex uses its loop as the walk edge). A closed
/// walk stores the start again as its last entry; length = edge count.
struct Walk {
  std::vector<int> vertices;
  bool closed = false;

  int length() const { return int(vertices.size()) - 1; }
  friend bool operator==(const Walk&, const Walk&) = default;
};

enum class FamilyId {
  F1, F2, F3, F4, F5, F6, F7, F8, F9,
  T0, T1, T2, T3, T4, T5, T6,
  ReflexiveTriangle,
  Fence,
  TTn, TTstar, TTblowup,
};

std::string family_name(FamilyId id);
std::optional<FamilyId> family_from_name(const std::string& name);

/// Parameters pinning one member of a family. Which fields matter depends
/// on the family: cycles/paths/fences use `length`; trampolines use `k`,
/// `loopless_rim` (the subset S of rim vertices whose loops were removed)
/// and `matching`; tournaments use `n`, `i`, `k` plus `loop_set`.
struct FamilySpec {
  FamilyId id = FamilyId::F1;
  int length = 0;
  int n = 0, i = 0, k = 0;
  std::vector<int> loop_set;
  std::vector<int> loopless_rim;
  std::vector<std::pair<int, int>> matching;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

std::string to_string(const FamilySpec& spec);

struct StrongOrderingCert {
  VertexOrdering ordering;
  friend bool operator==(const StrongOrderingCert&, const StrongOrderingCert&) = default;
};

/// An induced-subgraph embedding of a forbidden family member: embedding[i]
/// is the host vertex playing role i of the canonical member generate(spec).
struct ObstructionCert {
  FamilySpec spec;
  std::vector<int> embedding;
  friend bool operator==(const ObstructionCert&, const ObstructionCert&) = default;
};

struct BadWalkCert {
  Walk walk;
  friend bool operator==(const BadWalkCert&, const BadWalkCert&) = default;
};

struct UnwitnessedCert {
  std::string reason;
  friend bool operator==(const UnwitnessedCert&, const UnwitnessedCert&) = default;
};

using Certificate =
    std::variant<StrongOrderingCert, ObstructionCert, BadWalkCert, UnwitnessedCert>;

inline bool certificate_accepts(const Certificate& c) {
  return std::holds_alternative<StrongOrderingCert>(c);
}

} // namespace scd

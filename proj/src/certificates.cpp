#include "scd/certificates.hpp"

#include <array>
#include <sstream>

namespace scd {

namespace {

constexpr std::array<const char*, 21> kFamilyNames = {
    "F1", "F2", "F3", "F4", "F5", "F6", "F7", "F8", "F9",
    "T0", "T1", "T2", "T3", "T4", "T5", "T6",
    "RefTriangle", "Fence", "TTn", "TTstar", "TTblowup"};

} // namespace

std::string family_name(FamilyId id) { return kFamilyNames[size_t(id)]; }

std::optional<FamilyId> family_from_name(const std::string& name) {
  for (size_t i = 0; i < kFamilyNames.size(); ++i)
    if (name == kFamilyNames[i]) return FamilyId(i);
  return std::nullopt;
}

std::string to_string(const FamilySpec& spec) {
  std::ostringstream os;
  os << family_name(spec.id);
  switch (spec.id) {
    case FamilyId::F1:
    case FamilyId::F2:
    case FamilyId::F3:
    case FamilyId::F4:
    case FamilyId::F5:
    case FamilyId::F6:
    case FamilyId::F7:
    case FamilyId::F9:
    case FamilyId::Fence:
      os << "(len=" << spec.length << ")";
      break;
    case FamilyId::F8: {
      os << "(k=" << spec.k;
      if (!spec.loopless_rim.empty()) {
        os << ", S={";
        for (size_t i = 0; i < spec.loopless_rim.size(); ++i)
          os << (i ? "," : "") << spec.loopless_rim[i];
        os << "}";
      }
      if (!spec.matching.empty()) {
        os << ", M={";
        for (size_t i = 0; i < spec.matching.size(); ++i)
          os << (i ? "," : "") << spec.matching[i].first << "-" << spec.matching[i].second;
        os << "}";
      }
      os << ")";
      break;
    }
    case FamilyId::TTn:
    case FamilyId::TTstar:
      os << "(n=" << spec.n << ")";
      break;
    case FamilyId::TTblowup:
      os << "(n=" << spec.n << ",i=" << spec.i << ",k=" << spec.k << ")";
      break;
    default:
      break;
  }
  if (!spec.loop_set.empty() && spec.id != FamilyId::F8) {
    os << "+loops{";
    for (size_t i = 0; i < spec.loop_set.size(); ++i)
      os << (i ? "," : "") << spec.loop_set[i];
    os << "}";
  }
  return os.str();
}

} // namespace scd

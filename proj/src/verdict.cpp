#include "relhom/verdict.hpp"

namespace relhom {

bool ResolutionComplex::exact_below_top() const {
  for (const auto& c : certificates)
    for (const auto& h : c.homology)
      if (!h.is_zero()) return false;
  return true;
}

bool ResolutionComplex::exact() const {
  if (!exact_below_top()) return false;
  for (const auto& c : certificates)
    if (!c.top_injective) return false;
  return true;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Yes: return "Yes";
    case Status::No: return "No";
    case Status::Unknown: return "Unknown";
  }
  return "Unknown";
}

}  // namespace relhom

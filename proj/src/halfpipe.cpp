#include "racg/halfpipe.hpp"

namespace racg {

std::string to_string(DualPointClass c) {
  switch (c) {
    case DualPointClass::Intersect: return "Intersect";
    case DualPointClass::BoundaryTangent: return "BoundaryTangent";
    case DualPointClass::Disjoint: return "Disjoint";
  }
  return "?";
}

std::string HPPairReport::describe() const {
  switch (kind) {
    case Case::BothDegenerate:
      return "degenerate pair, projections " + to_string(*projected) + (commuting ? ", commuting" : "");
    case Case::BothNonDegenerate:
      return "non-degenerate pair, " + to_string(*dual) + (commuting ? ", commuting" : "");
    case Case::Mixed:
      return std::string("mixed pair, ") + (commuting ? "commuting" : "not commuting");
  }
  return "?";
}

}  // namespace racg

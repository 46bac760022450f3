#include "racg/geometry.hpp"

namespace racg {

QuadraticSpace::QuadraticSpace(std::vector<int> sig) : dim(static_cast<int>(sig.size())), signature(std::move(sig)) {
  if (dim == 0) throw DimensionMismatch("empty signature");
  for (int s : signature) {
    if (s < -1 || s > 1) throw DimensionMismatch("signature entries must be -1, 0 or +1");
  }
}

QuadraticSpace QuadraticSpace::hyperbolic(int n) {
  std::vector<int> sig(n + 1, 1);
  sig[0] = -1;
  return QuadraticSpace(sig);
}

QuadraticSpace QuadraticSpace::anti_de_sitter(int n) {
  std::vector<int> sig(n + 1, 1);
  sig[0] = -1;
  sig[n] = -1;
  return QuadraticSpace(sig);
}

QuadraticSpace QuadraticSpace::half_pipe(int n) {
  std::vector<int> sig(n + 1, 1);
  sig[0] = -1;
  sig[n] = 0;
  return QuadraticSpace(sig);
}

QuadraticSpace QuadraticSpace::minkowski(int dim) { return hyperbolic(dim - 1); }

std::string to_string(PairClassHyp c) {
  switch (c) {
    case PairClassHyp::Intersecting: return "Intersecting";
    case PairClassHyp::TangentAtInfinity: return "TangentAtInfinity";
    case PairClassHyp::Disjoint: return "Disjoint";
  }
  return "?";
}

std::string to_string(PairClassAdS c) {
  switch (c) {
    case PairClassAdS::Intersecting: return "Intersecting";
    case PairClassAdS::TangentAtInfinity: return "TangentAtInfinity";
    case PairClassAdS::Disjoint: return "Disjoint";
    case PairClassAdS::SpacelikeIntersection: return "SpacelikeIntersection";
    case PairClassAdS::LightlikeIntersection: return "LightlikeIntersection";
    case PairClassAdS::TimelikeIntersection: return "TimelikeIntersection";
  }
  return "?";
}

std::string to_string(HyperplaneType c) {
  switch (c) {
    case HyperplaneType::Spacelike: return "Spacelike";
    case HyperplaneType::Timelike: return "Timelike";
    case HyperplaneType::Lightlike: return "Lightlike";
  }
  return "?";
}

}  // namespace racg

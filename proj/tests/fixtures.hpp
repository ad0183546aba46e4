#pragma once

// Ideals used throughout the test suites.

#include <vector>

#include "acm/parse.hpp"

namespace fixtures {

inline acm::RingPtr p3() { return acm::PolyRing::make(32003, {"x", "y", "z", "w"}); }

inline std::vector<acm::Polynomial> gens(const acm::RingPtr& r, std::initializer_list<const char*> xs) {
  std::vector<acm::Polynomial> out;
  for (const char* s : xs) out.push_back(acm::parse_form(r, s));
  return out;
}

/// Four coordinate points of P^3.
inline std::vector<acm::Polynomial> tetrahedron(const acm::RingPtr& r) {
  return gens(r, {"x*y", "x*z", "x*w", "y*z", "y*w", "z*w"});
}

/// Coordinate points plus (1:1:1:1).
inline std::vector<acm::Polynomial> five_points(const acm::RingPtr& r) {
  return gens(r, {"x*y - x*z", "x*y - x*w", "x*y - y*z", "x*y - y*w", "x*y - z*w"});
}

/// (1:0:0:0), (0:1:0:0), (0:0:1:0), (1:1:1:0) in the plane w = 0.
inline std::vector<acm::Polynomial> four_planar_points(const acm::RingPtr& r) {
  return gens(r, {"w", "x*y - x*z", "x*z - y*z"});
}

/// Union of the lines V(x,y), V(y,z), V(z,w).
inline std::vector<acm::Polynomial> three_lines(const acm::RingPtr& r) {
  return gens(r, {"y*z", "y*w", "x*z"});
}

/// Complete intersection of two quadrics.
inline std::vector<acm::Polynomial> ci22(const acm::RingPtr& r) {
  return gens(r, {"x*y - z*w", "x^2 + y^2 - z^2 - w^2"});
}

}  // namespace fixtures

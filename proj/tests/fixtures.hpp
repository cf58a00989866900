#pragma once

#include "forge/cubefamily.hpp"
#include "forge/mkconfig.hpp"

namespace forge::test {

// Built once per test binary; every constructor below checks its own invariants.
inline const NamedScene& atlas() {
  static const NamedScene s = build_atlas();
  return s;
}

inline const MapM& map_m() {
  static const MapM m = build_map_M(atlas());
  return m;
}

inline const Roli& roli() {
  static const Roli r = build_roli(atlas());
  return r;
}

inline const Roli& enantiomorph() {
  static const Roli r = build_enantiomorph(atlas());
  return r;
}

inline const Cover& cover() {
  static const Cover c = build_cover(atlas(), roli(), enantiomorph());
  return c;
}

inline const PointLabels& labels() {
  static const PointLabels l = configuration_labels(map_m(), atlas());
  return l;
}

inline SignedPerm sp(const char* text, int n = 4) { return SignedPerm::parse(text, n); }

}  // namespace forge::test

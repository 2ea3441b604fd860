#pragma once

#include "syzygy/curves.hpp"
#include "syzygy/koszul.hpp"

#include <optional>
#include <string>
#include <vector>

namespace syzygy::corpus {

/// One embedded curve of the standard verification corpus.
struct Case {
  std::string name;
  curves::CurveModel curve;
  int d = 0;
  /// Window to compute; nullopt p means [0, r].
  std::optional<koszul::IndexRange> p;
  koszul::IndexRange q{0, 3};
  bool long_running = false;
};

curves::CurveModel hyperelliptic_genus2();  // y^2 = x^5 + x + 1
curves::CurveModel hyperelliptic_genus3();  // y^2 = x^7 + x + 1
curves::CurveModel hyperelliptic_genus4();  // y^2 = x^9 + x + 1
curves::CurveModel trigonal_genus4();       // y^3 = x^5 + 2x + 1
curves::CurveModel tetragonal_genus9();     // y^4 = x^7 + x + 1

/// rational d=3..6, hyperelliptic g=2 d=5..7, g=3 d=7..8, g=4 d=9,
/// trigonal g=4 d=9,10; with `extended`, also the genus-9 tetragonal
/// curve at d=21 restricted to K_{9,1}.
std::vector<Case> standard_cases(bool extended = false);

}  // namespace syzygy::corpus

#include "syzygy/corpus.hpp"

namespace syzygy::corpus {

using curves::build_curve;
using curves::CurveModel;

CurveModel hyperelliptic_genus2() { return build_curve(2, {1, 1, 0, 0, 0, 1}); }

CurveModel hyperelliptic_genus3() {
  return build_curve(2, {1, 1, 0, 0, 0, 0, 0, 1});
}

CurveModel hyperelliptic_genus4() {
  return build_curve(2, {1, 1, 0, 0, 0, 0, 0, 0, 0, 1});
}

CurveModel trigonal_genus4() { return build_curve(3, {1, 2, 0, 0, 0, 1}); }

CurveModel tetragonal_genus9() {
  return build_curve(4, {1, 1, 0, 0, 0, 0, 0, 1});
}

namespace {

Case full(std::string name, CurveModel curve, int d) {
  Case c{std::move(name), std::move(curve), d, std::nullopt};
  return c;
}

}  // namespace

std::vector<Case> standard_cases(bool extended) {
  std::vector<Case> cases;
  for (int d = 3; d <= 6; ++d) {
    cases.push_back(full("rational d=" + std::to_string(d), CurveModel::rational(), d));
  }
  for (int d = 5; d <= 7; ++d) {
    cases.push_back(
        full("hyperelliptic g=2 d=" + std::to_string(d), hyperelliptic_genus2(), d));
  }
  for (int d = 7; d <= 8; ++d) {
    cases.push_back(
        full("hyperelliptic g=3 d=" + std::to_string(d), hyperelliptic_genus3(), d));
  }
  cases.push_back(full("hyperelliptic g=4 d=9", hyperelliptic_genus4(), 9));
  cases.push_back(full("trigonal g=4 d=9", trigonal_genus4(), 9));
  cases.push_back(full("trigonal g=4 d=10", trigonal_genus4(), 10));
  if (extended) {
    Case big = full("tetragonal g=9 d=21", tetragonal_genus9(), 21);
    big.p = koszul::IndexRange{9, 9};
    big.q = koszul::IndexRange{1, 1};
    big.long_running = true;
    cases.push_back(big);
  }
  return cases;
}

}  // namespace syzygy::corpus

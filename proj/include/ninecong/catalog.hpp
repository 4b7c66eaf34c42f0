#ifndef NINECONG_CATALOG_HPP
#define NINECONG_CATALOG_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "families3.hpp"
#include "unipoly.hpp"
#include "weierstrass.hpp"

namespace ninecong {

class UnknownEquations : public std::runtime_error {
 public:
  explicit UnknownEquations(const std::string& id)
      : std::runtime_error("no printed equations for case " + id) {}
};

// A worked example: a level-9 model for a named curve, simplified by a printed
// 4x4 substitution, with the points found on the simplified model and the
// congruent curves they map to.
struct TwistedExampleCase {
  std::string id;
  Sign sign;
  std::string base_label;
  Curve<Rat> base_curve;  // published reduced model of the base curve
  Rat a, b;               // the y^2 = x^3 + a x + b model the cubics are built from
  std::vector<std::vector<Rat>> matrix;
  int search_height;
  std::vector<std::vector<Rat>> points;  // on the substituted model
  std::vector<std::string> labels;       // per point
  std::vector<Curve<Rat>> expected;      // per point, published reduced model
};

// A list of pairwise 9-congruent curves given by published equations.
struct TripleCase {
  std::string id;
  Sign sign;
  std::vector<std::string> labels;
  std::vector<Curve<Rat>> curves;
};

// A one-parameter family example: a point on the level-9 model over Q(T),
// its printed forgetful image, and a specialization giving a non-isogenous
// 9-congruent pair over Q.
struct QTCase {
  std::string id;
  Sign sign;
  UPoly a, b;
  std::vector<UPoly> point;  // projective, 4 coordinates
  UPoly r, s;
  Rat t0;
  std::vector<std::string> specialized_labels;
};

const std::vector<TwistedExampleCase>& twisted_example_cases();
const std::vector<TripleCase>& triple_cases();
const std::vector<QTCase>& qt_cases();

const TwistedExampleCase& twisted_example_case(const std::string& id);
const TripleCase& triple_case(const std::string& id);
const QTCase& qt_case(const std::string& id);

// every case identifier accepted by reproduce(), in a fixed order
std::vector<std::string> all_case_ids();

}  // namespace ninecong

#endif

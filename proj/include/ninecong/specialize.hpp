#ifndef NINECONG_SPECIALIZE_HPP
#define NINECONG_SPECIALIZE_HPP

#include <stdexcept>

#include "ratfun.hpp"
#include "weierstrass.hpp"

namespace ninecong {

class BadSpecialization : public std::domain_error {
 public:
  explicit BadSpecialization(const std::string& why) : std::domain_error(why) {}
};

// Evaluate a Q(T)-curve at T = t0; the fiber must be defined and non-singular.
inline Curve<Rat> specialize(const Curve<RatFun>& e, const Rat& t0) {
  Curve<Rat> f;
  try {
    f = Curve<Rat>{e.a1.eval(t0), e.a2.eval(t0), e.a3.eval(t0), e.a4.eval(t0), e.a6.eval(t0)};
  } catch (const std::domain_error&) {
    throw BadSpecialization("coefficient has a pole at T = " + to_string(t0));
  }
  if (is_zero(invariants(f).disc))
    throw BadSpecialization("singular fiber at T = " + to_string(t0));
  return f;
}

}  // namespace ninecong

#endif

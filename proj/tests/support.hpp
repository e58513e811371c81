#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "curvelift/random.hpp"
#include "curvelift/rational.hpp"

namespace curvelift::testing {

using curvelift::uniform_int;

// Random rational p/q with |p/q| <= bound and q <= max_den.
inline Rational random_rational(std::mt19937_64& rng, std::int64_t bound, std::int64_t max_den) {
  const std::int64_t q = uniform_int(rng, 1, max_den);
  const std::int64_t p = uniform_int(rng, -bound * q, bound * q);
  Rational r(static_cast<long>(p), static_cast<unsigned long>(q));
  r.canonicalize();
  return r;
}

}  // namespace curvelift::testing

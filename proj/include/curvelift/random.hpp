#pragma once

#include <cstdint>
#include <random>

#include "curvelift/rational.hpp"

namespace curvelift {

// Modulo reduction keeps draws identical across standard libraries; the bias
// is negligible for the small ranges used here.
inline std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Uniform on the dyadic grid of [-1, 1] with spacing 2^-20.
inline Rational uniform_unit_rational(std::mt19937_64& rng) {
  constexpr std::int64_t kScale = 1 << 20;
  return ratio(static_cast<long>(uniform_int(rng, -kScale, kScale)), kScale);
}

}  // namespace curvelift

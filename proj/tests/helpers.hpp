#pragma once

#include "mukai/errors.hpp"
#include "mukai/surface_lattice.hpp"

#include <optional>

namespace testing {

// The error code thrown by f, or nullopt when f returns normally.
template <class F>
std::optional<mukai::ErrorCode> error_of(F&& f) {
  try {
    f();
  } catch (const mukai::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline mukai::Rational q(long p, long d = 1) {
  mukai::Rational x(p, d);
  x.canonicalize();
  return x;
}

} // namespace testing

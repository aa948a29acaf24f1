#pragma once

#include <complex>
#include <functional>
#include <optional>

#include <doctest.h>

#include "harmonia/error.hpp"
#include "harmonia/numerics.hpp"

namespace harmonia::test {

// Kind of the harmonia::Error thrown by `body`, or nullopt when it returns normally.
inline std::optional<ErrorKind> thrown_kind(const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

inline double rel_diff(cplx got, cplx want) { return std::abs(got - want) / std::max(1e-300, std::abs(want)); }

}  // namespace harmonia::test

#define CHECK_KIND(expr, kind) CHECK(::harmonia::test::thrown_kind([&] { (void)(expr); }) == (kind))
#define CHECK_REL(got, want, tol) CHECK(::harmonia::test::rel_diff((got), (want)) < (tol))

#pragma once

#include "doctest.h"

#include "drg/error.hpp"
#include "drg/ratio.hpp"

// Runs `expr` and checks that it throws drg::Error of the given kind.
#define CHECK_THROWS_KIND(expr, expected)                   \
  do {                                                      \
    bool thrown_ = false;                                   \
    try {                                                   \
      (void)(expr);                                         \
    } catch (const drg::Error& e_) {                        \
      thrown_ = true;                                       \
      CHECK(e_.kind() == (expected));                       \
    }                                                       \
    CHECK_MESSAGE(thrown_, "expected an error from " #expr); \
  } while (0)

inline drg::ExactRatio frac(std::int64_t a, std::int64_t b) { return drg::ExactRatio(drg::BigInt(a), drg::BigInt(b)); }

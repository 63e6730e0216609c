#pragma once

#include <doctest.h>

#include "genpos/error.hpp"

#define CHECK_CODE(expr, expected)                                   \
  do {                                                               \
    try {                                                            \
      (void)(expr);                                                  \
      FAIL_CHECK("expected " << genpos::to_string(expected));        \
    } catch (const genpos::Error& e) {                               \
      CHECK_MESSAGE(e.code() == (expected), e.what());               \
    }                                                                \
  } while (0)

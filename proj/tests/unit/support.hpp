#pragma once

#include <doctest.h>

#include <string>

#include "germsig/error.hpp"

// Checks that `expr` throws germsig::Error with the given name.
#define CHECK_ERROR(expr, error_name)                                   \
  do {                                                                  \
    try {                                                               \
      (void)(expr);                                                     \
      FAIL_CHECK("expected " << (error_name) << ", nothing thrown");    \
    } catch (const germsig::Error& e_) {                                \
      CHECK_MESSAGE(e_.name() == std::string(error_name), e_.what());   \
    }                                                                   \
  } while (0)

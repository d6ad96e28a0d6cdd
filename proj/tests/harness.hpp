#pragma once

#include <cstdio>
#include <functional>
#include <string>

#include "daggercat/errors.hpp"

// Minimal test harness: expect(...) records failures, finish() reports.
// Each suite is a plain main() so a failing check never hides later ones.

inline int g_failures = 0;
inline int g_checks = 0;

inline void expect(bool ok, const std::string& what) {
  ++g_checks;
  if (!ok) {
    ++g_failures;
    std::printf("FAILED: %s\n", what.c_str());
  }
}

template <typename Fn>
void expect_kind(Fn&& fn, daggercat::ErrKind kind, const std::string& what) {
  ++g_checks;
  try {
    fn();
    ++g_failures;
    std::printf("FAILED: %s (no error raised)\n", what.c_str());
  } catch (const daggercat::ValidationError& e) {
    if (e.kind() != kind) {
      ++g_failures;
      std::printf("FAILED: %s (got %s: %s)\n", what.c_str(),
                  std::string(daggercat::to_string(e.kind())).c_str(),
                  e.witness().c_str());
    }
  }
}

template <typename Fn>
void expect_no_throw(Fn&& fn, const std::string& what) {
  ++g_checks;
  try {
    fn();
  } catch (const std::exception& e) {
    ++g_failures;
    std::printf("FAILED: %s (raised: %s)\n", what.c_str(), e.what());
  }
}

inline int finish(const char* suite) {
  if (g_failures > 0) {
    std::printf("%s: %d of %d checks failed\n", suite, g_failures, g_checks);
    return 1;
  }
  std::printf("%s: %d checks passed\n", suite, g_checks);
  return 0;
}

#pragma once

#include <cstddef>
#include <string>

namespace tasep {

/// Outcome of an exhaustive identity check. Only the first counterexample
/// is kept.
struct CheckReport {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::string detail;
  std::string counterexample;

  void fail(std::string what) {
    if (passed) counterexample = std::move(what);
    passed = false;
  }
};

}  // namespace tasep

#pragma once

#include <string>
#include <string_view>

#include "inflap/metric_graph.hpp"

namespace inflap {

enum class Status { kPass, kFail, kInapplicable };

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::kPass:
      return "PASS";
    case Status::kFail:
      return "FAIL";
    case Status::kInapplicable:
      return "INAPPLICABLE";
  }
  return "?";
}

/// A point where a check failed, with the size of the failure.
template <class T>
struct Witness {
  GraphPoint<T> point;
  T defect;
};

}  // namespace inflap

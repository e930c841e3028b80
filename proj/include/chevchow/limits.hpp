#pragma once

#include <cstddef>

namespace chevchow {

inline constexpr std::size_t kDefaultGroupCap = 1'000'000;
inline constexpr std::size_t kDefaultDegreeBudget = 64;

/// Resource limits shared by every enumeration in the library.
struct Limits {
  std::size_t group_cap = kDefaultGroupCap;
  std::size_t degree_budget = kDefaultDegreeBudget;
};

}  // namespace chevchow

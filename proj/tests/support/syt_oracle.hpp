#pragma once

#include <oscitab/partition.hpp>

#include <vector>

namespace oscitab::testing {

// Counts standard Young tableaux by exhaustive filling: grow a diagram inside
// the target shape one box at a time, numbering the boxes 1..n. Shares
// nothing with the hook-length route in the library.
inline long long count_syt_by_filling(const Partition& shape) {
  const auto& target = shape.parts();
  std::vector<int> current(target.size(), 0);
  long long count = 0;
  auto place = [&](auto&& self, int placed) -> void {
    if (placed == shape.size()) {
      ++count;
      return;
    }
    for (std::size_t r = 0; r < target.size(); ++r) {
      if (current[r] == target[r]) continue;
      if (r > 0 && current[r - 1] <= current[r]) continue;
      ++current[r];
      self(self, placed + 1);
      --current[r];
    }
  };
  place(place, 0);
  return count;
}

}  // namespace oscitab::testing

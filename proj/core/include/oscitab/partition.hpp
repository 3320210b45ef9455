#pragma once

#include <oscitab/numbers.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

namespace oscitab {

/// An integer partition in canonical form: weakly decreasing positive parts,
/// no trailing zeros. The default value is the empty partition.
///
/// Canonical storage makes structural equality coincide with mathematical
/// equality, so partitions can key maps and sets directly.
class Partition {
 public:
  Partition() = default;

  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;  // lexicographic on part sequences
  }

  /// Wraps parts that are already canonical. No validation.
  static Partition unchecked(std::vector<int> parts);
  /// In-place variant of unchecked(); reuses the existing allocation.
  void assign_unchecked(const std::vector<int>& parts);

 private:
  std::vector<int> parts_;
};

/// Validates and canonicalizes a part sequence: trailing zeros are stripped,
/// then every part must be positive and weakly decreasing.
/// Throws ValidationError otherwise.
Partition make_partition(const std::vector<int>& parts);

struct Cell {
  int row = 0;      // 1-based
  int col = 0;      // 1-based
  int hook = 0;     // boxes to the right + boxes below + 1
  int content = 0;  // col - row
};

/// All cells of the diagram in row-major order, hooks and contents filled in.
std::vector<Cell> cells(const Partition& shape);

/// Product of all hook lengths of the diagram (1 for the empty partition).
Int hook_product(const Partition& shape);

/// Number of standard Young tableaux of the given shape: |shape|! divided by
/// the hook product (the division is exact). Memoized; safe to call from
/// multiple threads.
Int syt_count(const Partition& shape);

/// Partitions obtained by adding one box, ascending lexicographic order.
std::vector<Partition> up_neighbors(const Partition& shape);

/// Partitions obtained by removing one box, ascending lexicographic order.
std::vector<Partition> down_neighbors(const Partition& shape);

/// All partitions of n, descending lexicographic order from (n) to (1,...,1).
std::vector<Partition> partitions_of_size(int n);

/// JSON array of parts, e.g. [4,2,2,1]; the empty partition is [].
std::string to_json_string(const Partition& shape);
Partition partition_from_json(const std::string& text);

std::ostream& operator<<(std::ostream& os, const Partition& shape);

}  // namespace oscitab

#include <oscitab/partition.hpp>

#include <oscitab/errors.hpp>

#include <json.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>

namespace oscitab {

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::unchecked(std::vector<int> parts) {
  Partition p;
  p.parts_ = std::move(parts);
  return p;
}

void Partition::assign_unchecked(const std::vector<int>& parts) { parts_ = parts; }

Partition make_partition(const std::vector<int>& parts) {
  std::vector<int> cleaned(parts);
  while (!cleaned.empty() && cleaned.back() == 0) cleaned.pop_back();
  for (std::size_t i = 0; i < cleaned.size(); ++i) {
    if (cleaned[i] <= 0) throw ValidationError("partition parts must be positive");
    if (i > 0 && cleaned[i - 1] < cleaned[i])
      throw ValidationError("partition parts must be weakly decreasing");
  }
  return Partition::unchecked(std::move(cleaned));
}

std::vector<Cell> cells(const Partition& shape) {
  const auto& parts = shape.parts();
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(shape.size()));
  for (int r = 0; r < shape.rows(); ++r) {
    for (int c = 0; c < parts[r]; ++c) {
      const int arm = parts[r] - c - 1;
      int leg = 0;
      for (int rr = r + 1; rr < shape.rows() && parts[rr] > c; ++rr) ++leg;
      out.push_back(Cell{r + 1, c + 1, arm + leg + 1, c - r});
    }
  }
  return out;
}

Int hook_product(const Partition& shape) {
  Int product = 1;
  for (const Cell& cell : cells(shape)) product *= cell.hook;
  return product;
}

Int syt_count(const Partition& shape) {
  static std::mutex mutex;
  static std::map<std::vector<int>, Int> memo;
  {
    std::scoped_lock lock(mutex);
    auto it = memo.find(shape.parts());
    if (it != memo.end()) return it->second;
  }
  Int count;
  const Int numerator = factorial(static_cast<unsigned long>(shape.size()));
  const Int hooks = hook_product(shape);
  mpz_divexact(count.get_mpz_t(), numerator.get_mpz_t(), hooks.get_mpz_t());
  std::scoped_lock lock(mutex);
  memo.emplace(shape.parts(), count);
  return count;
}

std::vector<Partition> up_neighbors(const Partition& shape) {
  const auto& parts = shape.parts();
  const int rows = shape.rows();
  std::vector<Partition> out;
  out.reserve(static_cast<std::size_t>(rows) + 1);
  // row index descending yields ascending lexicographic order
  for (int r = rows; r >= 0; --r) {
    const bool addable = r == rows || r == 0 || parts[r - 1] > parts[r];
    if (!addable) continue;
    std::vector<int> next(parts);
    if (r == rows)
      next.push_back(1);
    else
      next[r] += 1;
    out.push_back(Partition::unchecked(std::move(next)));
  }
  return out;
}

std::vector<Partition> down_neighbors(const Partition& shape) {
  const auto& parts = shape.parts();
  const int rows = shape.rows();
  std::vector<Partition> out;
  for (int r = 0; r < rows; ++r) {
    const bool removable = r == rows - 1 || parts[r] > parts[r + 1];
    if (!removable) continue;
    std::vector<int> next(parts);
    next[r] -= 1;
    if (next[r] == 0) next.pop_back();  // only the last row can reach zero
    out.push_back(Partition::unchecked(std::move(next)));
  }
  return out;
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& prefix,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition::unchecked(prefix));
    return;
  }
  for (int part = std::min(max_part, remaining); part >= 1; --part) {
    prefix.push_back(part);
    emit_partitions(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of_size(int n) {
  if (n < 0) throw ValidationError("partition size must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> prefix;
  emit_partitions(n, n, prefix, out);
  return out;
}

std::string to_json_string(const Partition& shape) {
  return nlohmann::json(shape.parts()).dump();
}

Partition partition_from_json(const std::string& text) {
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("bad partition JSON: ") + e.what());
  }
  if (!parsed.is_array()) throw ValidationError("partition JSON must be an array of integers");
  std::vector<int> parts;
  for (const auto& value : parsed) {
    if (!value.is_number_integer())
      throw ValidationError("partition JSON must be an array of integers");
    parts.push_back(value.get<int>());
  }
  return make_partition(parts);
}

std::ostream& operator<<(std::ostream& os, const Partition& shape) {
  os << '[';
  for (int r = 0; r < shape.rows(); ++r) {
    if (r) os << ',';
    os << shape.parts()[r];
  }
  return os << ']';
}

}  // namespace oscitab

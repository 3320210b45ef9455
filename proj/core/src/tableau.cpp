#include <oscitab/tableau.hpp>

#include <oscitab/errors.hpp>

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <thread>
#include <utility>

namespace oscitab {

bool is_valid_oscillating_tableau(const OscillatingTableau& t) {
  if (t.steps.empty() || !t.steps.front().empty()) return false;
  for (std::size_t i = 0; i + 1 < t.steps.size(); ++i) {
    const auto& a = t.steps[i].parts();
    const auto& b = t.steps[i + 1].parts();
    const auto rows = std::max(a.size(), b.size());
    if (a.size() + 1 < b.size() || b.size() + 1 < a.size()) return false;
    int changed_rows = 0, delta = 0;
    for (std::size_t r = 0; r < rows; ++r) {
      const int pa = r < a.size() ? a[r] : 0;
      const int pb = r < b.size() ? b[r] : 0;
      if (pa != pb) {
        ++changed_rows;
        delta = pb - pa;
      }
    }
    if (changed_rows != 1 || (delta != 1 && delta != -1)) return false;
  }
  return true;
}

OscillatingTableau make_oscillating_tableau(std::vector<Partition> steps) {
  OscillatingTableau t{std::move(steps)};
  if (!is_valid_oscillating_tableau(t))
    throw ValidationError("steps do not form an oscillating tableau");
  return t;
}

Int count_oscillating(const Partition& shape, int length) {
  const int k = shape.size();
  if (length < k || (length - k) % 2 != 0) return 0;
  const int n = (length - k) / 2;
  return binomial(static_cast<unsigned long>(length), static_cast<unsigned long>(k)) *
         double_factorial(2L * n - 1) * syt_count(shape);
}

namespace {

using DpKey = std::pair<std::vector<int>, int>;

Int count_walks_to(const Partition& target, int steps_left, std::map<DpKey, Int>& memo,
                   std::mutex& mutex) {
  const int size = target.size();
  if (size > steps_left || (steps_left - size) % 2 != 0) return 0;
  if (steps_left == 0) return 1;  // target is empty here
  const DpKey key{target.parts(), steps_left};
  {
    std::scoped_lock lock(mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  Int total = 0;
  for (const Partition& previous : down_neighbors(target))
    total += count_walks_to(previous, steps_left - 1, memo, mutex);
  for (const Partition& previous : up_neighbors(target))
    total += count_walks_to(previous, steps_left - 1, memo, mutex);
  std::scoped_lock lock(mutex);
  return memo.emplace(key, std::move(total)).first->second;
}

}  // namespace

Int count_oscillating_dp(const Partition& shape, int length) {
  static std::mutex mutex;
  static std::map<DpKey, Int> memo;
  if (length < 0) return 0;
  return count_walks_to(shape, length, memo, mutex);
}

namespace {

// Depth-first construction from the ending shape toward the empty partition.
// At position p the partition must fit into p remaining steps (size <= p with
// matching parity); the bound is tight, so no dead branches are explored.
// Predecessors are visited removals-first (bottom row upward), then additions
// (top row downward, new row last), which fixes the emission order.
class BackwardEnumerator {
 public:
  BackwardEnumerator(const Partition& shape, int length,
                     const std::function<bool(const OscillatingTableau&)>& visit)
      : visit_(visit) {
    buffer_.steps.assign(static_cast<std::size_t>(length) + 1, Partition{});
    buffer_.steps.back() = shape;
    current_ = shape.parts();
  }

  void run(int length, int size) {
    if (size > length || (length - size) % 2 != 0) return;
    descend(length, size);
  }

 private:
  bool descend(int position, int size) {
    if (position == 0) return visit_(buffer_);
    const int rows = static_cast<int>(current_.size());
    for (int r = rows - 1; r >= 0; --r) {
      if (r != rows - 1 && current_[r] == current_[r + 1]) continue;
      current_[r] -= 1;
      const bool popped = current_[r] == 0;
      if (popped) current_.pop_back();
      if (!step_into(position, size - 1)) return false;
      if (popped) current_.push_back(0);
      current_[r] += 1;
    }
    if (size + 1 <= position - 1) {
      for (int r = 0; r <= rows; ++r) {
        if (r < rows && r != 0 && current_[r - 1] == current_[r]) continue;
        if (r == rows)
          current_.push_back(1);
        else
          current_[r] += 1;
        if (!step_into(position, size + 1)) return false;
        if (r == rows)
          current_.pop_back();
        else
          current_[r] -= 1;
      }
    }
    return true;
  }

  bool step_into(int position, int new_size) {
    buffer_.steps[static_cast<std::size_t>(position) - 1].assign_unchecked(current_);
    return descend(position - 1, new_size);
  }

  const std::function<bool(const OscillatingTableau&)>& visit_;
  OscillatingTableau buffer_;
  std::vector<int> current_;
};

}  // namespace

void enumerate_oscillating(const Partition& shape, int length,
                           const std::function<bool(const OscillatingTableau&)>& visit) {
  if (length < 0) return;
  BackwardEnumerator(shape, length, visit).run(length, shape.size());
}

Rational weight(const OscillatingTableau& t, const WeightSpec& w) {
  Rational sum = 0;
  for (std::size_t i = 0; i < t.steps.size(); ++i)
    sum += w.poly.evaluate(t.steps[i].size(), static_cast<long>(i));
  return sum;
}

Int hook_box_sum(const Partition& shape, int r) {
  Int sum = 0;
  for (const Cell& cell : cells(shape)) {
    Int product = 1;
    for (int j = 1; j <= r; ++j) product *= Int(cell.hook) * cell.hook - Int(j) * j;
    sum += product;
  }
  return sum;
}

Int content_box_sum(const Partition& shape, int r) {
  Int sum = 0;
  for (const Cell& cell : cells(shape)) {
    Int product = 1;
    for (int j = 0; j < r; ++j) product *= Int(cell.content) * cell.content - Int(j) * j;
    sum += product;
  }
  return sum;
}

Int hook_product_weight(const OscillatingTableau& t, int r) {
  Int sum = 0;
  for (const Partition& step : t.steps) sum += hook_box_sum(step, r);
  return sum;
}

Int content_product_weight(const OscillatingTableau& t, int r) {
  Int sum = 0;
  for (const Partition& step : t.steps) sum += content_box_sum(step, r);
  return sum;
}

StepWeight polynomial_step_weight(const BivariatePolynomial& p) {
  return [p](const Partition& part, int position) {
    return p.evaluate(part.size(), position);
  };
}

StepWeight hook_step_weight(int r) {
  return [r](const Partition& part, int) { return Rational(hook_box_sum(part, r)); };
}

StepWeight content_step_weight(int r) {
  return [r](const Partition& part, int) { return Rational(content_box_sum(part, r)); };
}

namespace {

struct Subtree {
  Partition shape;              // partition at the split position
  int position = 0;             // walk steps still undetermined
  std::vector<Rational> tail;   // weight already accumulated above the split
};

WeightSums sum_subtree(const Subtree& subtree, std::span<const StepWeight> weights) {
  WeightSums result{0, std::vector<Rational>(weights.size(), Rational(0))};
  enumerate_oscillating(subtree.shape, subtree.position, [&](const OscillatingTableau& t) {
    result.count += 1;
    for (std::size_t w = 0; w < weights.size(); ++w) {
      Rational sum = subtree.tail[w];
      for (std::size_t i = 0; i < t.steps.size(); ++i)
        sum += weights[w](t.steps[i], static_cast<int>(i));
      result.sums[w] += sum;
    }
    return true;
  });
  return result;
}

}  // namespace

WeightSums weight_sums(const Partition& shape, int length, std::span<const StepWeight> weights,
                       int workers) {
  WeightSums total{0, std::vector<Rational>(weights.size(), Rational(0))};
  if (length < 0) return total;
  if (workers <= 1) {
    return sum_subtree(Subtree{shape, length, total.sums}, weights);
  }

  // Peel off the top of the walk until there are enough independent subtrees
  // to keep the workers busy; each frontier entry fixes the walk's tail.
  std::vector<Subtree> frontier{Subtree{shape, length, total.sums}};
  const std::size_t target = static_cast<std::size_t>(workers) * 8;
  while (frontier.size() < target && frontier.front().position > 0 &&
         frontier.size() < 4096) {
    std::vector<Subtree> next;
    next.reserve(frontier.size() * 4);
    for (const Subtree& entry : frontier) {
      std::vector<Rational> tail = entry.tail;
      for (std::size_t w = 0; w < weights.size(); ++w)
        tail[w] += weights[w](entry.shape, entry.position);
      const int position = entry.position - 1;
      auto expand = [&](const Partition& previous) {
        if (previous.size() > position || (position - previous.size()) % 2 != 0) return;
        next.push_back(Subtree{previous, position, tail});
      };
      for (const Partition& p : down_neighbors(entry.shape)) expand(p);
      for (const Partition& p : up_neighbors(entry.shape)) expand(p);
    }
    if (next.empty()) return total;  // empty tableau set
    frontier = std::move(next);
  }

  std::vector<WeightSums> partials(frontier.size());
  std::atomic<std::size_t> cursor{0};
  auto work = [&] {
    for (std::size_t i = cursor.fetch_add(1); i < frontier.size(); i = cursor.fetch_add(1))
      partials[i] = sum_subtree(frontier[i], weights);
  };
  std::vector<std::thread> pool;
  const int thread_count = std::min<int>(workers, static_cast<int>(frontier.size()));
  pool.reserve(static_cast<std::size_t>(thread_count));
  for (int t = 0; t < thread_count; ++t) pool.emplace_back(work);
  for (auto& thread : pool) thread.join();

  for (const WeightSums& partial : partials) {
    total.count += partial.count;
    for (std::size_t w = 0; w < weights.size(); ++w) total.sums[w] += partial.sums[w];
  }
  return total;
}

Rational average_weight_bruteforce(const Partition& shape, int length, const StepWeight& w,
                                   int workers) {
  const StepWeight weights[] = {w};
  WeightSums sums = weight_sums(shape, length, weights, workers);
  if (sums.count == 0)
    throw EmptySetError("no oscillating tableaux of the requested shape and length");
  return Rational(sums.sums[0] / sums.count);
}

std::string to_json_string(const OscillatingTableau& t) {
  nlohmann::json steps = nlohmann::json::array();
  for (const Partition& step : t.steps) steps.push_back(step.parts());
  return steps.dump();
}

OscillatingTableau tableau_from_json(const std::string& text) {
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("bad tableau JSON: ") + e.what());
  }
  if (!parsed.is_array() || parsed.empty())
    throw ValidationError("tableau JSON must be a nonempty array of partitions");
  std::vector<Partition> steps;
  steps.reserve(parsed.size());
  for (const auto& step : parsed) steps.push_back(partition_from_json(step.dump()));
  return make_oscillating_tableau(std::move(steps));
}

}  // namespace oscitab

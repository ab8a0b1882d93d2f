#include "knarayana/pathcount.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <sstream>

namespace knarayana {

EnumerationBudget EnumerationBudget::parse(const std::string& text) {
  EnumerationBudget b;
  if (text == "off") {
    b.unlimited = true;
    return b;
  }
  std::istringstream in(text);
  std::string field;
  int* targets[] = {&b.max_sulanke_steps, &b.max_path_steps, &b.max_coordinate};
  std::size_t idx = 0;
  while (std::getline(in, field, ':')) {
    if (idx == 3) throw std::invalid_argument("NARAYANA_BUDGET has too many fields: " + text);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(field, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != field.size() || field.empty() || v < 0)
      throw std::invalid_argument("bad NARAYANA_BUDGET value: " + text);
    *targets[idx++] = v;
  }
  if (idx == 0) throw std::invalid_argument("empty NARAYANA_BUDGET");
  return b;
}

EnumerationBudget EnumerationBudget::from_environment() {
  const char* env = std::getenv("NARAYANA_BUDGET");
  if (env == nullptr || *env == '\0') return {};
  return parse(env);
}

namespace {

void check_sulanke(const SulankePathSpec& spec, const EnumerationBudget& budget) {
  if (spec.k < 1 || spec.r < 0) throw std::invalid_argument("Sulanke paths need k >= 1 and r >= 0");
  const long steps = static_cast<long>(spec.k) * spec.r;
  if (!budget.unlimited && steps > budget.max_sulanke_steps)
    throw BudgetExceeded("Sulanke enumeration of " + std::to_string(steps) + " steps exceeds the budget of " +
                         std::to_string(budget.max_sulanke_steps) + " (set NARAYANA_BUDGET to override)");
}

struct SulankeState {
  std::vector<int> x;
  int last = -1;
  int ascents = 0;
  int steps = 0;
};

class SulankeSearch {
 public:
  SulankeSearch(int k, int r) : k_(k), r_(r), total_(k * r), buckets_(static_cast<std::size_t>(k * r + 1), 0) {}

  void run(SulankeState s) { dfs(s.x, s.last, s.ascents, s.steps); }
  const std::vector<std::uint64_t>& buckets() const { return buckets_; }

  bool can_step(const std::vector<int>& x, int i) const {
    return x[static_cast<std::size_t>(i)] < r_ && (i == k_ - 1 || x[static_cast<std::size_t>(i)] < x[static_cast<std::size_t>(i) + 1]);
  }

 private:
  void dfs(std::vector<int>& x, int last, int ascents, int steps) {
    if (steps == total_) {
      ++buckets_[static_cast<std::size_t>(ascents)];
      return;
    }
    for (int i = 0; i < k_; ++i) {
      if (!can_step(x, i)) continue;
      ++x[static_cast<std::size_t>(i)];
      dfs(x, i, ascents + (last >= 0 && i > last ? 1 : 0), steps + 1);
      --x[static_cast<std::size_t>(i)];
    }
  }

  int k_, r_, total_;
  std::vector<std::uint64_t> buckets_;
};

}  // namespace

std::map<int, Integer> count_sulanke_paths(const SulankePathSpec& spec, const EnumerationBudget& budget,
                                           unsigned jobs) {
  check_sulanke(spec, budget);
  const int k = spec.k, r = spec.r;
  std::vector<std::uint64_t> buckets(static_cast<std::size_t>(k * r + 1), 0);

  // Expand prefixes breadth-first until there is enough work to share.
  std::vector<SulankeState> frontier{SulankeState{std::vector<int>(static_cast<std::size_t>(k), 0), -1, 0, 0}};
  SulankeSearch probe(k, r);
  if (jobs > 1) {
    while (frontier.size() < 4 * jobs && frontier.front().steps < k * r) {
      std::vector<SulankeState> next;
      for (const auto& s : frontier) {
        for (int i = 0; i < k; ++i) {
          if (!probe.can_step(s.x, i)) continue;
          SulankeState t = s;
          ++t.x[static_cast<std::size_t>(i)];
          t.ascents += (s.last >= 0 && i > s.last) ? 1 : 0;
          t.last = i;
          ++t.steps;
          next.push_back(std::move(t));
        }
      }
      frontier = std::move(next);
    }
  }

  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs, frontier.size()));
  std::vector<std::future<std::vector<std::uint64_t>>> parts;
  for (std::size_t w = 0; w < workers; ++w) {
    parts.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred, [&, w] {
      SulankeSearch search(k, r);
      for (std::size_t i = w; i < frontier.size(); i += workers) search.run(frontier[i]);
      return search.buckets();
    }));
  }
  for (auto& p : parts) {
    auto b = p.get();
    for (std::size_t i = 0; i < b.size(); ++i) buckets[i] += b[i];
  }

  std::map<int, Integer> out;
  for (std::size_t i = 0; i < buckets.size(); ++i)
    if (buckets[i] != 0) out.emplace(static_cast<int>(i), Integer(static_cast<unsigned long>(buckets[i])));
  return out;
}

Integer count_sulanke_paths_total_dp(const SulankePathSpec& spec, const EnumerationBudget& budget) {
  check_sulanke(spec, budget);
  const int k = spec.k, r = spec.r;
  std::map<std::vector<int>, Integer> layer{{std::vector<int>(static_cast<std::size_t>(k), 0), Integer(1)}};
  for (int s = 0; s < k * r; ++s) {
    std::map<std::vector<int>, Integer> next;
    for (const auto& [x, count] : layer) {
      for (int i = 0; i < k; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        if (x[ui] >= r || (i + 1 < k && x[ui] >= x[ui + 1])) continue;
        std::vector<int> y = x;
        ++y[ui];
        next[y] += count;
      }
    }
    layer = std::move(next);
  }
  Integer total = 0;
  for (const auto& [x, count] : layer) total += count;
  return total;
}

namespace {

class NarayanaSearch {
 public:
  NarayanaSearch(const std::vector<int>& target, int steps) : a_(target), steps_(steps), k_(target.size()) {}

  std::uint64_t count() {
    std::vector<int> origin(k_, 0);
    return extend(origin, 0);
  }

 private:
  // Paths from `pos` (reached after `done` steps) to the target.
  std::uint64_t extend(const std::vector<int>& pos, int done) {
    if (done == steps_) return pos == a_ ? 1 : 0;
    const int l = done + 1;
    const int remaining = steps_ - l;
    std::vector<int> next(k_);
    return choose(pos, next, 0, l, remaining);
  }

  // Fill next[i..] with x_i in (pos_i, bound], nonincreasing, last one >= l.
  std::uint64_t choose(const std::vector<int>& pos, std::vector<int>& next, std::size_t i, int l, int remaining) {
    if (i == k_) return extend(next, l);
    int hi = a_[i] - remaining;  // later steps still add at least one each
    if (i > 0) hi = std::min(hi, next[i - 1]);
    int lo = pos[i] + 1;
    if (i + 1 == k_) lo = std::max(lo, l);
    std::uint64_t total = 0;
    for (int v = lo; v <= hi; ++v) {
      next[i] = v;
      total += choose(pos, next, i + 1, l, remaining);
    }
    return total;
  }

  std::vector<int> a_;
  int steps_;
  std::size_t k_;
};

}  // namespace

Integer count_narayana_paths(const NarayanaPathSpec& spec, const EnumerationBudget& budget) {
  const auto& a = spec.a;
  if (a.empty()) throw std::invalid_argument("Narayana path target must be nonempty");
  if (spec.steps < 0) throw std::invalid_argument("step count must be >= 0");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0) throw std::invalid_argument("Narayana path target must be nonnegative");
    if (i > 0 && a[i] > a[i - 1]) throw std::invalid_argument("Narayana path target must be nonincreasing");
  }
  if (!budget.unlimited) {
    if (spec.steps > budget.max_path_steps)
      throw BudgetExceeded("Narayana path enumeration with " + std::to_string(spec.steps) +
                           " steps exceeds the budget of " + std::to_string(budget.max_path_steps));
    if (a.front() > budget.max_coordinate)
      throw BudgetExceeded("Narayana path target coordinate " + std::to_string(a.front()) +
                           " exceeds the budget of " + std::to_string(budget.max_coordinate));
  }
  if (a.back() < spec.steps) return 0;
  NarayanaSearch search(a, spec.steps);
  return Integer(static_cast<unsigned long>(search.count()));
}

}  // namespace knarayana

#include "wildcount/local_count.hpp"

#include "wildcount/error.hpp"

#include <cmath>
#include <thread>

namespace wildcount {

namespace {

struct SlotLayout {
  std::vector<std::int64_t> free;    // a < v
  std::vector<std::int64_t> forced;  // v <= b < 2v
};

SlotLayout layout(int p, const Threshold& v) {
  SlotLayout s;
  Threshold twice{v.value * 2, v.above};
  for (std::int64_t b = 1; twice.exceeds(Rational(b)); ++b) {
    if (b % p == 0) continue;
    (v.exceeds(Rational(b)) ? s.free : s.forced).push_back(b);
  }
  return s;
}

std::uint64_t count_range(const std::shared_ptr<const LieBaseChange>& lie, const Threshold& v,
                          const SlotLayout& slots, std::uint64_t first_begin, std::uint64_t stride) {
  const std::uint64_t size = lie->size();
  const std::size_t k = slots.free.size();
  std::uint64_t count = 0;
  std::vector<std::uint64_t> digits(k, 0);
  digits[0] = first_begin;
  while (true) {
    LocalDatum D(lie);
    for (std::size_t s = 0; s < k; ++s) D.set(slots.free[s], lie->from_index(digits[s]));
    LocalDatum base = D;
    for (std::int64_t b : slots.forced) D.set(b, forced_value(base, v, b));
    if (satisfies_J(D, v)) ++count;
    // Odometer over the remaining slots, then step the first slot by stride.
    std::size_t s = k - 1;
    while (true) {
      if (s == 0) {
        digits[0] += stride;
        if (digits[0] >= size) return count;
        break;
      }
      if (++digits[s] < size) break;
      digits[s] = 0;
      --s;
    }
  }
}

}  // namespace

std::uint64_t count_lastjump_lt(const std::shared_ptr<const LieBaseChange>& lie, const Threshold& v, int jobs) {
  if (v.value < Rational(0) || (v.value == Rational(0) && !v.above)) throw UserError("count bound must be positive");
  const SlotLayout slots = layout(lie->p(), v);
  if (slots.free.empty()) return 1;
  const long double required =
      std::pow(static_cast<long double>(lie->size()), static_cast<long double>(slots.free.size()));
  check_scale("count of data with bounded last jump", required, 1e9L);
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(std::min<std::uint64_t>(lie->size(), 256))));
  if (jobs == 1) return count_range(lie, v, slots, 0, 1);
  std::vector<std::uint64_t> partial(jobs, 0);
  std::vector<std::thread> workers;
  for (int w = 0; w < jobs; ++w)
    workers.emplace_back([&, w] { partial[w] = count_range(lie, v, slots, w, jobs); });
  for (auto& t : workers) t.join();
  std::uint64_t total = 0;
  for (auto c : partial) total += c;
  return total;
}

std::uint64_t count_lastjump_le(const std::shared_ptr<const LieBaseChange>& lie, const Rational& v, int jobs) {
  return count_lastjump_lt(lie, just_above(v), jobs);
}

std::uint64_t count_lastjump_eq(const std::shared_ptr<const LieBaseChange>& lie, const Rational& v, int jobs) {
  if (v == Rational(0)) return 1;
  return count_lastjump_le(lie, v, jobs) - count_lastjump_lt(lie, strictly(v), jobs);
}

std::vector<Rational> distribution_grid(int p, int max_order, int degree, const Rational& vmax) {
  std::vector<std::int64_t> keys;
  for (std::int64_t b = 1; Rational(b) <= vmax * 2; ++b)
    if (b % p != 0) keys.push_back(b);
  std::vector<Rational> out;
  for (const auto& c : jump_candidates_for_keys(keys, p, max_order, degree))
    if (c <= vmax) out.push_back(c);
  return out;
}

std::vector<JumpCount> jump_distribution(const std::shared_ptr<const LieBaseChange>& lie, const Rational& vmax,
                                         int jobs) {
  if (vmax <= Rational(0)) throw UserError("vmax must be positive");
  std::vector<JumpCount> rows{{Rational(0), 1}};
  std::uint64_t below = 1;  // data with lastjump <= previous grid point
  for (const auto& c : distribution_grid(lie->p(), lie->max_order(), lie->degree(), vmax)) {
    const std::uint64_t lt = count_lastjump_lt(lie, strictly(c), jobs);
    if (lt != below)
      throw InvariantViolation("last jump strictly between grid points below " + to_fraction(c));
    const std::uint64_t le = count_lastjump_le(lie, c, jobs);
    if (le != lt) rows.push_back({c, le - lt});
    below = le;
  }
  return rows;
}

}  // namespace wildcount

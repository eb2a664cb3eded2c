#include "wildcount/heisenberg.hpp"

#include "wildcount/error.hpp"
#include "wildcount/lie_algebra.hpp"
#include "wildcount/lie_base_change.hpp"
#include "wildcount/local_count.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <bit>
#include <cmath>
#include <memory>
#include <thread>

namespace wildcount {

namespace {

long double power_ld(long double base, int e) { return std::pow(base, static_cast<long double>(e)); }

std::uint64_t power_u(std::uint64_t base, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// table[i][code] = sigma^i(code) for i in [0, count).
std::vector<std::vector<std::uint32_t>> frobenius_tables(const FiniteField& F, int count) {
  std::vector<std::vector<std::uint32_t>> t(count, std::vector<std::uint32_t>(F.size()));
  for (int i = 0; i < count; ++i)
    for (std::uint32_t c = 0; c < F.size(); ++c) t[i][c] = F.frobenius(FieldElement{c}, i).code;
  return t;
}

}  // namespace

SymplecticSpace::SymplecticSpace(int k, FiniteField field) : k_(k), field_(std::move(field)) {
  if (k < 1) throw UserError("symplectic rank k must be positive");
}

std::uint64_t SymplecticSpace::size() const { return power_u(field_.size(), 2 * k_); }

FieldElement SymplecticSpace::form(const std::vector<FieldElement>& x, const std::vector<FieldElement>& y) const {
  FieldElement acc = field_.zero();
  for (int i = 0; i < k_; ++i) {
    acc = field_.add(acc, field_.mul(x[i], y[k_ + i]));
    acc = field_.sub(acc, field_.mul(x[k_ + i], y[i]));
  }
  return acc;
}

std::vector<FieldElement> SymplecticSpace::frobenius(const std::vector<FieldElement>& x, int times) const {
  std::vector<FieldElement> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = field_.frobenius(x[i], times);
  return y;
}

std::vector<FieldElement> SymplecticSpace::vector_at(std::uint64_t index) const {
  std::vector<FieldElement> x(2 * k_);
  for (auto& e : x) {
    e = FieldElement{static_cast<std::uint32_t>(index % field_.size())};
    index /= field_.size();
  }
  return x;
}

std::uint64_t a_km_bruteforce(int k, int m, const FiniteField& F, int jobs) {
  if (k < 1 || m < 0) throw UserError("need k >= 1 and m >= 0");
  const SymplecticSpace V(k, F);
  check_scale("A_{k,m} brute force", power_ld(F.size(), 2 * k), 1e8L);
  const std::uint64_t total = V.size();
  if (m == 0) return total;
  const int d = F.degree();
  const auto frob = frobenius_tables(F, d);
  auto count = [&](std::uint64_t begin, std::uint64_t stride) {
    std::uint64_t found = 0;
    std::vector<FieldElement> x, y(2 * k);
    for (std::uint64_t idx = begin; idx < total; idx += stride) {
      x = V.vector_at(idx);
      bool ok = true;
      for (int i = 1; i <= m && ok; ++i) {
        for (int j = 0; j < 2 * k; ++j) y[j] = FieldElement{frob[i % d][x[j].code]};
        ok = V.form(y, x) == F.zero();
      }
      if (ok) ++found;
    }
    return found;
  };
  jobs = std::max(1, jobs);
  if (jobs == 1) return count(0, 1);
  std::vector<std::uint64_t> partial(jobs);
  std::vector<std::thread> workers;
  for (int w = 0; w < jobs; ++w) workers.emplace_back([&, w] { partial[w] = count(w, jobs); });
  for (auto& t : workers) t.join();
  std::uint64_t sum = 0;
  for (auto c : partial) sum += c;
  return sum;
}

std::uint64_t a_km_charsum(int k, int m, const FiniteField& F) {
  if (k < 1 || m < 1) throw UserError("character sum needs k >= 1 and m >= 1");
  const std::uint64_t q = F.size();
  check_scale("A_{k,m} character sum", power_ld(q, m + 1), 1e8L);
  const int d = F.degree();
  const auto frob = frobenius_tables(F, d);
  auto sig = [&](int i, std::uint32_t c) { return FieldElement{frob[((i % d) + d) % d][c]}; };

  // Per b: the monomials b^{p^m + p^{m-i}} and b^{p^{m+i} + p^m}, i = 1..m.
  std::vector<std::vector<FieldElement>> low(q, std::vector<FieldElement>(m + 1)),
      high(q, std::vector<FieldElement>(m + 1));
  for (std::uint32_t b = 0; b < q; ++b)
    for (int i = 1; i <= m; ++i) {
      low[b][i] = F.mul(sig(m, b), sig(m - i, b));
      high[b][i] = F.mul(sig(m + i, b), sig(m, b));
    }

  using boost::multiprecision::cpp_int;
  cpp_int sum = 0;
  const std::uint64_t tuples = power_u(q, m);
  std::vector<std::uint32_t> t(m + 1);
  for (std::uint64_t idx = 0; idx < tuples; ++idx) {
    std::uint64_t rest = idx;
    for (int i = 1; i <= m; ++i) {
      t[i] = static_cast<std::uint32_t>(rest % q);
      rest /= q;
    }
    std::uint64_t roots = 0;
    for (std::uint32_t b = 0; b < q; ++b) {
      FieldElement acc = F.zero();
      for (int i = 1; i <= m; ++i) {
        acc = F.add(acc, F.mul(sig(m - i, t[i]), low[b][i]));
        acc = F.sub(acc, F.mul(sig(m, t[i]), high[b][i]));
      }
      if (acc == F.zero()) ++roots;
    }
    sum += boost::multiprecision::pow(cpp_int(roots), k);
  }
  cpp_int result;
  if (k >= m) {
    result = sum * boost::multiprecision::pow(cpp_int(q), k - m);
  } else {
    cpp_int div = boost::multiprecision::pow(cpp_int(q), m - k);
    if (sum % div != 0) throw InvariantViolation("character sum is not divisible by q^{m-k}");
    result = sum / div;
  }
  return result.convert_to<std::uint64_t>();
}

std::vector<std::vector<std::vector<int>>> maximal_isotropic_subspaces(int p, int k) {
  if (k < 1) throw UserError("symplectic rank k must be positive");
  check_scale("isotropic subspace enumeration", power_ld(p, 2 * k), 1e7L);
  const int n = 2 * k;
  auto form = [&](const std::vector<int>& x, const std::vector<int>& y) {
    long s = 0;
    for (int i = 0; i < k; ++i) s += x[i] * y[k + i] - x[k + i] * y[i];
    return ((s % p) + p) % p;
  };
  std::vector<std::vector<std::vector<int>>> out;
  // Pivot columns as a bitmask with k bits set; rows in reduced echelon form.
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    std::vector<int> pivots;
    for (int c = 0; c < n; ++c)
      if (mask >> c & 1) pivots.push_back(c);
    std::vector<std::pair<int, int>> free_slots;  // (row, column)
    for (int r = 0; r < k; ++r)
      for (int c = pivots[r] + 1; c < n; ++c)
        if (!(mask >> c & 1)) free_slots.push_back({r, c});
    const std::uint64_t choices = power_u(p, static_cast<int>(free_slots.size()));
    for (std::uint64_t idx = 0; idx < choices; ++idx) {
      std::vector<std::vector<int>> rows(k, std::vector<int>(n, 0));
      for (int r = 0; r < k; ++r) rows[r][pivots[r]] = 1;
      std::uint64_t rest = idx;
      for (auto [r, c] : free_slots) {
        rows[r][c] = static_cast<int>(rest % p);
        rest /= p;
      }
      bool isotropic = true;
      for (int i = 0; i < k && isotropic; ++i)
        for (int j = i + 1; j < k && isotropic; ++j) isotropic = form(rows[i], rows[j]) == 0;
      if (isotropic) out.push_back(std::move(rows));
    }
  }
  return out;
}

IsotropicCount isotropic_count(int p, int k) {
  IsotropicCount c;
  c.brute_force = maximal_isotropic_subspaces(p, k).size();
  c.formula = 1;
  for (int i = 1; i <= k; ++i) c.formula *= power_u(p, i) + 1;
  return c;
}

std::uint64_t a_km_stable(int k, const FiniteField& F) {
  const std::uint64_t q = F.size();
  check_scale("isotropic union", power_ld(q, 2 * k), 1e8L);
  const SymplecticSpace V(k, F);
  std::vector<bool> seen(V.size(), false);
  const std::uint64_t combos = power_u(q, k);
  for (const auto& rows : maximal_isotropic_subspaces(F.p(), k)) {
    for (std::uint64_t idx = 0; idx < combos; ++idx) {
      std::vector<FieldElement> x(2 * k, F.zero());
      std::uint64_t rest = idx;
      for (int r = 0; r < k; ++r) {
        FieldElement lambda{static_cast<std::uint32_t>(rest % q)};
        rest /= q;
        for (int c = 0; c < 2 * k; ++c)
          if (rows[r][c] != 0) x[c] = F.add(x[c], F.mul(F.from_int(rows[r][c]), lambda));
      }
      std::uint64_t index = 0;
      for (int c = 2 * k - 1; c >= 0; --c) index = index * q + x[c].code;
      seen[index] = true;
    }
  }
  std::uint64_t count = 0;
  for (bool b : seen) count += b;
  return count;
}

std::uint64_t heisenberg_local_small_v(int k, const FiniteField& F, int m, int jobs) {
  const std::uint64_t expected = F.size() * a_km_bruteforce(k, m, F, jobs);
  auto h = std::make_shared<const LieAlgebra>(LieAlgebra::heisenberg(F.p(), k));
  auto lie = std::make_shared<const LieBaseChange>(h, F);
  const Rational v = Rational(1) + rpow(F.p(), -m);
  const std::uint64_t local = count_lastjump_lt(lie, strictly(v), jobs);
  if (local != expected)
    throw InvariantViolation("local count " + std::to_string(local) + " differs from q|A_{k,m}| = " +
                             std::to_string(expected));
  return expected;
}

}  // namespace wildcount

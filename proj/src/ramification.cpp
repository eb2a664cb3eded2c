#include "wildcount/ramification.hpp"

#include "wildcount/error.hpp"

#include <algorithm>
#include <set>

namespace wildcount {

void LocalDatum::set(std::int64_t b, LieElement value) {
  if (b < 1 || b % lie_->p() == 0)
    throw UserError("support key " + std::to_string(b) + " must be positive and prime to p");
  if (lie_->is_zero(value))
    support_.erase(b);
  else
    support_[b] = std::move(value);
}

LieElement LocalDatum::get(std::int64_t b) const {
  auto it = support_.find(b);
  return it == support_.end() ? lie_->zero() : it->second;
}

const LieElement* LocalDatum::find(std::int64_t b) const {
  auto it = support_.find(b);
  return it == support_.end() ? nullptr : &it->second;
}

int mu(const Threshold& v, std::int64_t b, int p) {
  int k = 0;
  Rational x(b);
  while (v.exceeds(x)) {
    x *= p;
    ++k;
  }
  return k;
}

Rational eta(int n1, int n2) {
  if (n1 < n2) throw UserError("eta(n1, n2) needs n1 >= n2");
  return n1 > n2 ? Rational(1) : Rational(1, 2);
}

namespace {

// Frobenius powers sigma^k(D_a), k in [0, d), for every support key.
class FrobeniusCache {
 public:
  explicit FrobeniusCache(const LocalDatum& D) : lie_(D.lie()) {
    for (const auto& [a, value] : D.support()) {
      auto& row = powers_[a];
      row.push_back(value);
      for (int k = 1; k < lie_.degree(); ++k) row.push_back(lie_.frobenius(row.back()));
    }
  }
  const LieElement& at(std::int64_t a, int k) const {
    const int d = lie_.degree();
    return powers_.at(a)[((k % d) + d) % d];
  }
  bool has(std::int64_t a) const { return powers_.count(a) > 0; }

 private:
  const LieBaseChange& lie_;
  std::map<std::int64_t, std::vector<LieElement>> powers_;
};

std::vector<std::int64_t> keys_of(const LocalDatum& D) {
  std::vector<std::int64_t> keys;
  for (const auto& [b, value] : D.support()) keys.push_back(b);
  return keys;
}

// Indices b prime to p with b < 2v, together with the support.
std::set<std::int64_t> integer_family_indices(const LocalDatum& D, const Threshold& v) {
  const int p = D.lie().p();
  std::set<std::int64_t> bs;
  for (const auto& [b, value] : D.support()) bs.insert(b);
  Threshold twice{v.value * 2, v.above};
  for (std::int64_t b = 1; twice.exceeds(Rational(b)); ++b)
    if (b % p != 0) bs.insert(b);
  return bs;
}

// sum over the decompositions target = a1 p^n1 + a2 p^n2 of 2 eta a1 p^n1 [s^n1 D_a1, s^n2 D_a2],
// restricted to a1 p^n1 < v and a2 p^n1 < v.
LieElement bracket_sum(const LocalDatum& D, const Threshold& v, const FrobeniusCache& cache, std::int64_t target,
                       bool exp_p) {
  const LieBaseChange& lie = D.lie();
  const int p = lie.p();
  const int L = lie.max_order();
  LieElement acc = lie.zero();
  if (lie.algebra().is_abelian()) return acc;
  for (const auto& [a1, unused] : D.support()) {
    std::int64_t pn = 1;
    for (int n1 = 0; n1 < (exp_p ? 1 : L); ++n1, pn *= p) {
      const std::int64_t A = a1 * pn;
      if (!v.exceeds(Rational(A)) || A >= target) break;
      const std::int64_t rest = target - A;
      const int n2 = valuation(rest, p);
      if (n2 > n1) continue;
      const std::int64_t a2 = rest / ipow(p, n2);
      if (!cache.has(a2) || !v.exceeds(Rational(a2 * pn))) continue;
      const std::int64_t coeff = (n1 == n2 ? 1 : 2) * a1 * pn;
      acc = lie.add(acc, lie.scale(lie.bracket(cache.at(a1, n1), cache.at(a2, n2)), coeff));
    }
  }
  return acc;
}

bool integer_family_holds(const LocalDatum& D, const Threshold& v, const FrobeniusCache& cache, bool exp_p) {
  const LieBaseChange& lie = D.lie();
  const int p = lie.p();
  const int L = lie.max_order();
  for (std::int64_t b : integer_family_indices(D, v)) {
    const int m = mu(v, b, p);
    LieElement acc = bracket_sum(D, v, cache, b * ipow(p, m), exp_p);
    if (cache.has(b) && m < L) acc = lie.add(acc, lie.scale(cache.at(b, m), 2 * b * ipow(p, m)));
    if (!lie.is_zero(acc)) return false;
  }
  return true;
}

bool noninteger_family_holds(const LocalDatum& D, const Threshold& v, const FrobeniusCache& cache, int first,
                             int last, bool exp_p) {
  const LieBaseChange& lie = D.lie();
  const int p = lie.p();
  const int L = lie.max_order();
  const std::vector<std::int64_t> keys = keys_of(D);
  std::map<std::pair<std::int64_t, int>, LieElement> groups;
  for (std::int64_t a1 : keys) {
    std::int64_t pn = 1;
    for (int n = 0; n < (exp_p ? 1 : L); ++n, pn *= p) {
      if (!v.exceeds(Rational(a1 * pn))) break;
      for (std::int64_t a2 : keys) {
        if (!v.exceeds(Rational(a2 * pn))) break;
        for (int i = 1; i <= last; ++i) {
          if (!v.at_most(Rational(a1 * pn) + Rational(a2, ipow(p, i)))) break;
          if (i < first) continue;
          const std::int64_t b = a1 * pn * ipow(p, i) + a2;
          LieElement term = lie.scale(lie.bracket(cache.at(a1, n + i), cache.at(a2, 0)), a1 * pn);
          auto [it, inserted] = groups.try_emplace({b, i}, term);
          if (!inserted) it->second = lie.add(it->second, term);
        }
      }
    }
  }
  for (const auto& [key, sum] : groups)
    if (!lie.is_zero(sum)) return false;
  return true;
}

}  // namespace

int noninteger_horizon(const LocalDatum& D) {
  return ceil_log(D.max_key() + 1, D.lie().p()) + D.lie().degree();
}

bool noninteger_equations_hold(const LocalDatum& D, const Threshold& v, int first, int last) {
  FrobeniusCache cache(D);
  return noninteger_family_holds(D, v, cache, first, last, false);
}

bool satisfies_J_general(const LocalDatum& D, const Threshold& v) {
  FrobeniusCache cache(D);
  return integer_family_holds(D, v, cache, false) &&
         noninteger_family_holds(D, v, cache, 1, noninteger_horizon(D), false);
}

bool satisfies_J_exp_p(const LocalDatum& D, const Threshold& v) {
  if (!D.lie().algebra().exponent_p()) throw UserError("exponent-p equations need p g = 0");
  FrobeniusCache cache(D);
  return integer_family_holds(D, v, cache, true) &&
         noninteger_family_holds(D, v, cache, 1, noninteger_horizon(D), true);
}

bool satisfies_J(const LocalDatum& D, const Threshold& v) {
  if (D.is_zero()) return true;
  return D.lie().algebra().exponent_p() ? satisfies_J_exp_p(D, v) : satisfies_J_general(D, v);
}

std::vector<Rational> jump_candidates_for_keys(const std::vector<std::int64_t>& keys, int p, int L, int d) {
  if (keys.empty()) return {};
  const std::int64_t max_key = *std::max_element(keys.begin(), keys.end());
  const int N = ceil_log(max_key + 1, p) + d + 1;
  std::set<Rational> c;
  for (std::int64_t b : keys)
    for (int m = 0; m <= L; ++m) c.insert(Rational(b * ipow(p, m)));
  for (std::int64_t a1 : keys)
    for (std::int64_t a2 : keys)
      for (int n1 = 0; n1 <= L; ++n1) {
        for (int n2 = 0; n2 <= n1; ++n2) c.insert(Rational(a1 * ipow(p, n1) + a2 * ipow(p, n2)));
        for (int i = 1; i <= N; ++i) c.insert(Rational(a1 * ipow(p, n1)) + Rational(a2, ipow(p, i)));
      }
  return {c.begin(), c.end()};
}

std::vector<Rational> jump_candidates(const LocalDatum& D) {
  return jump_candidates_for_keys(keys_of(D), D.lie().p(), D.lie().max_order(), D.lie().degree());
}

LieElement forced_value(const LocalDatum& D, const Threshold& v, std::int64_t b) {
  const LieBaseChange& lie = D.lie();
  if (mu(v, b, lie.p()) != 0) throw UserError("forced_value needs b >= v");
  FrobeniusCache cache(D);
  LieElement sum = bracket_sum(D, v, cache, b, lie.algebra().exponent_p());
  return lie.scale(lie.neg(sum), inverse_mod(2 * b, lie.ring().characteristic()));
}

Rational lastjump(const LocalDatum& D) {
  if (D.is_zero()) return Rational(0);
  const std::vector<Rational> cands = jump_candidates(D);
  // J(c) fails exactly for c <= lastjump; find the last failing candidate.
  std::ptrdiff_t lo = -1, hi = static_cast<std::ptrdiff_t>(cands.size());
  while (hi - lo > 1) {
    std::ptrdiff_t mid = (lo + hi) / 2;
    if (satisfies_J(D, strictly(cands[mid])))
      hi = mid;
    else
      lo = mid;
  }
  if (lo < 0) throw InvariantViolation("nonzero datum satisfies J at every candidate");
  const Rational jump = cands[lo];
  if (!satisfies_J(D, just_above(jump)))
    throw InvariantViolation("J fails just above the computed last jump " + to_fraction(jump));
  return jump;
}

namespace {

// Calls emit(gamma, term) for every term of the functionals, each scaled by 2.
template <typename Emit>
void functional_terms(const LocalDatum& D, int depth, Emit&& emit) {
  const LieBaseChange& lie = D.lie();
  const int p = lie.p();
  const int L = lie.max_order();
  FrobeniusCache cache(D);
  const std::vector<std::int64_t> keys = keys_of(D);
  for (std::int64_t b : keys)
    for (int m = 0; m < L; ++m) emit(Rational(b * ipow(p, m)), lie.scale(cache.at(b, m), 2 * b * ipow(p, m)));
  if (lie.algebra().is_abelian()) return;
  for (std::int64_t a1 : keys)
    for (std::int64_t a2 : keys)
      for (int n1 = 0; n1 < L; ++n1)
        for (int n2 = -depth; n2 <= n1; ++n2) {
          const std::int64_t coeff = (n1 == n2 ? 1 : 2) * a1 * ipow(p, n1);
          Rational gamma = Rational(a1 * ipow(p, n1)) + a2 * rpow(p, n2);
          emit(gamma, lie.scale(lie.bracket(cache.at(a1, n1), cache.at(a2, n2)), coeff));
        }
}

}  // namespace

LieElement ramification_functional(const LocalDatum& D, const Rational& gamma, int depth) {
  LieElement acc = D.lie().zero();
  functional_terms(D, depth, [&](const Rational& g, const LieElement& term) {
    if (g == gamma) acc = D.lie().add(acc, term);
  });
  return acc;
}

Rational lastjump_oracle(const LocalDatum& D) {
  if (D.is_zero()) return Rational(0);
  std::map<Rational, LieElement> sums;
  functional_terms(D, noninteger_horizon(D) + 1, [&](const Rational& g, const LieElement& term) {
    auto [it, inserted] = sums.try_emplace(g, term);
    if (!inserted) it->second = D.lie().add(it->second, term);
  });
  for (auto it = sums.rbegin(); it != sums.rend(); ++it)
    if (!D.lie().is_zero(it->second)) return it->first;
  return Rational(0);
}

LocalDatum act_on_datum(const LieElement& g, const LocalDatum& D) {
  const LieBaseChange& lie = D.lie();
  LieElement shift = lie.add(lie.frobenius(g), g);
  LocalDatum out(D.lie_ptr());
  for (const auto& [b, value] : D.support())
    out.set(b, lie.sub(value, lie.scale(lie.bracket(value, shift), lie.half())));
  return out;
}

}  // namespace wildcount

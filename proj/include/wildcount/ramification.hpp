#pragma once

#include "wildcount/lie_base_change.hpp"
#include "wildcount/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

namespace wildcount {

// A bound v, or v+ (v plus an infinitesimal) when `above` is set.
// x < v+ means x <= v.
struct Threshold {
  Rational value;
  bool above = false;

  bool exceeds(const Rational& x) const { return above ? x <= value : x < value; }  // x < *this
  bool at_most(const Rational& x) const { return !exceeds(x); }                     // x >= *this
};

inline Threshold strictly(const Rational& v) { return {v, false}; }
inline Threshold just_above(const Rational& v) { return {v, true}; }

// D = sum_b D_b pi^{-b} with p not dividing b; zero values are dropped.
class LocalDatum {
 public:
  explicit LocalDatum(std::shared_ptr<const LieBaseChange> lie) : lie_(std::move(lie)) {}

  const LieBaseChange& lie() const { return *lie_; }
  std::shared_ptr<const LieBaseChange> lie_ptr() const { return lie_; }
  const std::map<std::int64_t, LieElement>& support() const { return support_; }

  // Throws UserError unless b >= 1 and p does not divide b.
  void set(std::int64_t b, LieElement value);
  LieElement get(std::int64_t b) const;
  const LieElement* find(std::int64_t b) const;
  bool is_zero() const { return support_.empty(); }
  std::int64_t max_key() const { return support_.empty() ? 0 : support_.rbegin()->first; }

  friend bool operator==(const LocalDatum& a, const LocalDatum& b) { return a.support_ == b.support_; }

 private:
  std::shared_ptr<const LieBaseChange> lie_;
  std::map<std::int64_t, LieElement> support_;
};

// min{k >= 0 : b p^k >= v}
int mu(const Threshold& v, std::int64_t b, int p);
inline int mu(const Rational& v, std::int64_t b, int p) { return mu(strictly(v), b, p); }

// 1 if n1 > n2, 1/2 if n1 == n2; throws UserError if n1 < n2.
Rational eta(int n1, int n2);

// Property J(v); dispatches to the exponent-p equations when every n_i = 1.
bool satisfies_J(const LocalDatum& D, const Threshold& v);
inline bool satisfies_J(const LocalDatum& D, const Rational& v) { return satisfies_J(D, strictly(v)); }
bool satisfies_J_general(const LocalDatum& D, const Threshold& v);
bool satisfies_J_exp_p(const LocalDatum& D, const Threshold& v);
// Horizon of the non-integer family beyond which its equations repeat.
int noninteger_horizon(const LocalDatum& D);
// Non-integer equations with i restricted to [first, last]; true if all hold.
bool noninteger_equations_hold(const LocalDatum& D, const Threshold& v, int first, int last);

// Sorted values that can be a last jump of a datum with this support.
std::vector<Rational> jump_candidates(const LocalDatum& D);
// Same, for any datum supported on `keys`.
std::vector<Rational> jump_candidates_for_keys(const std::vector<std::int64_t>& keys, int p, int L, int d);

// For b >= v, the unique D_b compatible with J(v) given the D_a with a < v.
LieElement forced_value(const LocalDatum& D, const Threshold& v, std::int64_t b);

// Exact last jump; certified by J failing at the value and holding just above it.
Rational lastjump(const LocalDatum& D);
// Last jump from the nonvanishing of the ramification functionals.
Rational lastjump_oracle(const LocalDatum& D);
// The functional at gamma (scaled by the unit 2), with D_0 = 0 and depth N.
LieElement ramification_functional(const LocalDatum& D, const Rational& gamma, int depth);

// g.D : D_b -> D_b - [D_b, sigma(g) + g]/2
LocalDatum act_on_datum(const LieElement& g, const LocalDatum& D);

}  // namespace wildcount

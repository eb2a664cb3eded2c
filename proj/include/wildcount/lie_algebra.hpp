#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wildcount {

// [e_i, e_j] = value for i < j; value has one integer coordinate per generator.
struct BracketConstant {
  int i = 0;
  int j = 0;
  std::vector<std::int64_t> value;
};

// g = prod_i Z/p^{orders[i]} with the listed brackets; unlisted pairs commute.
struct LieAlgebraSpec {
  int p = 0;
  std::vector<int> orders;
  std::vector<BracketConstant> brackets;
};

// First violated axiom, or nullopt.
std::optional<std::string> check_spec(const LieAlgebraSpec& spec);

// Coordinates of an element of g, coordinate i in [0, p^{orders[i]}).
using IntVector = std::vector<std::int64_t>;

struct Subobjects {
  std::vector<IntVector> center_generators;
  std::vector<IntVector> p_torsion_generators;
  std::vector<IntVector> derived_generators;
  std::uint64_t center_size = 0;
  std::uint64_t p_torsion_size = 0;
  std::uint64_t derived_size = 0;
  int r = 0;  // log_p |g[p]|
  bool p_torsion_abelian = true;
  // Z(g) meets p^k g exactly in p^k Z(g) for every k.
  bool better_bound_hypothesis = false;
};

// A validated finite Lie Z_p-algebra of nilpotency class at most 2.
class LieAlgebra {
 public:
  explicit LieAlgebra(LieAlgebraSpec spec);  // throws UserError on violation

  static LieAlgebra abelian(int p, std::vector<int> orders);
  // h_k: basis a_1..a_k, b_1..b_k, z with [a_i, b_i] = z, over F_p.
  static LieAlgebra heisenberg(int p, int k);

  const LieAlgebraSpec& spec() const { return spec_; }
  int p() const { return spec_.p; }
  int rank() const { return static_cast<int>(spec_.orders.size()); }
  int max_order() const { return max_order_; }  // max_i n_i
  int order(int i) const { return spec_.orders[i]; }
  std::int64_t modulus(int i) const { return moduli_[i]; }  // p^{n_i}
  // Exponent of |g| as a power of p.
  int log_size() const;
  bool exponent_p() const { return max_order_ == 1; }
  bool is_abelian() const { return nonzero_brackets_.empty(); }
  const std::vector<BracketConstant>& nonzero_brackets() const { return nonzero_brackets_; }

  IntVector reduce(IntVector x) const;
  IntVector bracket(const IntVector& x, const IntVector& y) const;
  IntVector add(const IntVector& x, const IntVector& y) const;
  IntVector scale(const IntVector& x, std::int64_t k) const;
  bool is_zero(const IntVector& x) const;
  bool is_central(const IntVector& x) const;

  // Brute force over the |g| elements, guarded at 10^7.
  Subobjects subobjects() const;

 private:
  LieAlgebraSpec spec_;
  int max_order_ = 0;
  std::vector<std::int64_t> moduli_;
  std::vector<BracketConstant> nonzero_brackets_;
};

}  // namespace wildcount

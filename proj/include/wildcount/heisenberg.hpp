#pragma once

#include "wildcount/finite_field.hpp"

#include <cstdint>
#include <vector>

namespace wildcount {

// F_q^{2k} with the form f((a, b), (a', b')) = a.b' - b.a'. A vector is stored
// as (a_1..a_k, b_1..b_k).
class SymplecticSpace {
 public:
  SymplecticSpace(int k, FiniteField field);

  int k() const { return k_; }
  const FiniteField& field() const { return field_; }
  std::uint64_t size() const;  // q^{2k}

  FieldElement form(const std::vector<FieldElement>& x, const std::vector<FieldElement>& y) const;
  std::vector<FieldElement> frobenius(const std::vector<FieldElement>& x, int times) const;
  std::vector<FieldElement> vector_at(std::uint64_t index) const;

 private:
  int k_;
  FiniteField field_;
};

// #{x in F_q^{2k} : f(sigma^i x, x) = 0 for i = 1..m}, by exhaustion (q^{2k} <= 10^8).
std::uint64_t a_km_bruteforce(int k, int m, const FiniteField& field, int jobs = 1);

// Same count via q^{k-m} sum_t R(t)^k over t in F_q^m (q^{m+1} <= 10^8).
std::uint64_t a_km_charsum(int k, int m, const FiniteField& field);

// Bases (rows over F_p) of all k-dimensional totally isotropic subspaces of F_p^{2k}.
std::vector<std::vector<std::vector<int>>> maximal_isotropic_subspaces(int p, int k);

struct IsotropicCount {
  std::uint64_t brute_force = 0;
  std::uint64_t formula = 0;  // prod_{i=1..k} (p^i + 1)
};
IsotropicCount isotropic_count(int p, int k);

// |union over maximal isotropic W of W (x) F_q|.
std::uint64_t a_km_stable(int k, const FiniteField& field);

// q |A_{k,m}(F_q)|, checked against the local count below 1 + p^{-m} for h_k.
std::uint64_t heisenberg_local_small_v(int k, const FiniteField& field, int m, int jobs = 1);

}  // namespace wildcount

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace wildcount {

// An element of GF(p^d), stored as the integer sum_j c_j p^j of its coefficient
// vector in the polynomial basis 1, X, ..., X^{d-1}.
struct FieldElement {
  std::uint32_t code = 0;

  friend bool operator==(FieldElement, FieldElement) = default;
  friend auto operator<=>(FieldElement, FieldElement) = default;
};

// GF(p^d) = (Z/p)[X]/(modulus) for an odd prime p.
//
// Elements are coefficient vectors; multiplication goes through discrete-log
// tables when the field is small enough, which is never observable.
class FiniteField {
 public:
  static constexpr int kMaxDegree = 12;

  // Field with the smallest monic irreducible modulus of degree d, where monic
  // polynomials are ordered by the integer sum_j c_j p^j (i.e. lexicographically,
  // highest-degree coefficient first).
  static FiniteField create(int p, int d);

  // Explicit modulus, low-to-high coefficients, monic. Irreducibility is checked.
  FiniteField(int p, std::vector<int> modulus);

  int p() const { return p_; }
  int degree() const { return d_; }
  std::uint32_t size() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  FieldElement from_int(std::int64_t k) const;
  FieldElement from_coeffs(std::span<const int> coeffs) const;
  FieldElement from_index(std::uint32_t index) const { return {index}; }
  // The class of X.
  FieldElement generator() const;
  std::vector<int> coeffs(FieldElement x) const;

  FieldElement add(FieldElement x, FieldElement y) const;
  FieldElement sub(FieldElement x, FieldElement y) const;
  FieldElement neg(FieldElement x) const;
  FieldElement mul(FieldElement x, FieldElement y) const;
  FieldElement inv(FieldElement x) const;  // throws UserError on 0
  FieldElement pow(FieldElement x, std::uint64_t e) const;

  // x -> x^p, applied `times` times (any integer; negative means the inverse).
  FieldElement frobenius(FieldElement x, int times = 1) const;
  // Tr_{GF(p^d)/GF(p)}(x), as a residue in [0, p).
  int trace(FieldElement x) const;
  bool in_prime_field(FieldElement x) const { return x.code < static_cast<std::uint32_t>(p_); }

  // All p^d elements in increasing code order.
  std::vector<FieldElement> elements() const;

  friend bool operator==(const FiniteField& a, const FiniteField& b) {
    return a.p_ == b.p_ && a.modulus_ == b.modulus_;
  }

 private:
  FieldElement mul_poly(FieldElement x, FieldElement y) const;
  void build_tables();

  int p_ = 0;
  int d_ = 0;
  std::uint32_t q_ = 0;
  std::vector<int> modulus_;
  std::vector<std::uint32_t> pow_p_;  // p^j
  std::vector<std::uint32_t> exp_;    // powers of a primitive element
  std::vector<std::uint32_t> log_;    // inverse of exp_ on nonzero codes
  std::vector<FieldElement> frob_basis_;  // frobenius(X^j)
};

namespace poly {

// Dense polynomials over Z/p, low-to-high, without trailing zeros.
using Poly = std::vector<int>;

Poly trim(Poly a);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m, int p);
Poly powmod(const Poly& a, std::uint64_t e, const Poly& m, int p);
Poly sub(const Poly& a, const Poly& b, int p);
Poly rem(const Poly& a, const Poly& m, int p);
Poly gcd(Poly a, Poly b, int p);
bool is_irreducible(const Poly& f, int p);

}  // namespace poly

bool is_prime(std::int64_t n);

}  // namespace wildcount

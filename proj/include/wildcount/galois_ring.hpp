#pragma once

#include "wildcount/finite_field.hpp"

#include <cstdint>
#include <vector>

namespace wildcount {

// Element of GR(p^n, d): coefficients in [0, p^n) on the basis 1, X, ..., X^{d-1}.
struct RingElement {
  std::vector<std::int64_t> c;

  friend bool operator==(const RingElement&, const RingElement&) = default;
  friend auto operator<=>(const RingElement&, const RingElement&) = default;
};

// The Galois ring GR(p^n, d) = (Z/p^n)[X]/(F), a model of W_n(GF(p^d)).
//
// F is the monic lift of the residue field's modulus with coefficients in [0, p).
// Frobenius sends X to the unique root of F lifting X^p; it is stored as the
// matrix of its action on the monomial basis, for every power 0..d-1.
class GaloisRing {
 public:
  GaloisRing(FiniteField field, int n);

  const FiniteField& field() const { return field_; }
  int p() const { return field_.p(); }
  int n() const { return n_; }
  int degree() const { return field_.degree(); }
  std::int64_t characteristic() const { return pn_; }  // p^n
  // p^{nd}
  std::uint64_t size() const;
  const std::vector<std::int64_t>& lifted_modulus() const { return modulus_; }
  const RingElement& frobenius_image() const { return frob_image_; }

  RingElement zero() const { return {std::vector<std::int64_t>(degree(), 0)}; }
  RingElement one() const;
  RingElement from_int(std::int64_t k) const;
  RingElement from_coeffs(std::vector<std::int64_t> coeffs) const;
  // Base-p^n digits of index, low coefficient first; inverse of index().
  RingElement from_index(std::uint64_t index) const;
  std::uint64_t index(const RingElement& x) const;
  RingElement generator() const;

  RingElement add(const RingElement& x, const RingElement& y) const;
  RingElement sub(const RingElement& x, const RingElement& y) const;
  RingElement neg(const RingElement& x) const;
  RingElement mul(const RingElement& x, const RingElement& y) const;
  RingElement scale(const RingElement& x, std::int64_t k) const;
  RingElement pow(RingElement x, std::uint64_t e) const;
  // Throws UserError when x is not a unit.
  RingElement inverse(const RingElement& x) const;
  bool is_zero(const RingElement& x) const;

  // sigma^k for any integer k.
  RingElement frobenius(const RingElement& x, int k = 1) const;
  RingElement teichmuller(FieldElement a) const;
  RingElement mul_by_p(const RingElement& x) const { return scale(x, p()); }
  // p^k x == 0
  bool p_power_annihilates(const RingElement& x, int k) const;

  FieldElement residue(const RingElement& x) const;
  // Coefficientwise lift with digits in [0, p).
  RingElement lift(FieldElement a) const;

 private:
  RingElement reduce_product(std::vector<std::int64_t> prod) const;
  RingElement apply_matrix(const std::vector<RingElement>& columns, const RingElement& x) const;

  FiniteField field_;
  int n_;
  std::int64_t pn_;
  std::vector<std::int64_t> modulus_;  // monic, low-to-high, length d+1
  RingElement frob_image_;
  std::vector<std::vector<RingElement>> frob_powers_;  // [k][j] = sigma^k(X^j)
};

// Reduces k into [0, m).
inline std::int64_t mod_floor(std::int64_t k, std::int64_t m) {
  std::int64_t r = k % m;
  return r < 0 ? r + m : r;
}

// Inverse of a unit modulo m.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);

}  // namespace wildcount

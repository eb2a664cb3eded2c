#pragma once

#include "wildcount/galois_ring.hpp"
#include "wildcount/lie_algebra.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace wildcount {

// Element of g (x) W(kappa): for generator i, d coefficients in GR(p^L, d) reduced
// mod p^{n_i}, stored flat as c[i*d + j].
struct LieElement {
  std::vector<std::int64_t> c;

  friend bool operator==(const LieElement&, const LieElement&) = default;
  friend auto operator<=>(const LieElement&, const LieElement&) = default;
};

// g (x) W(kappa) = prod_i W_{n_i}(kappa) with bracket, BCH law and Frobenius.
class LieBaseChange {
 public:
  LieBaseChange(std::shared_ptr<const LieAlgebra> algebra, const FiniteField& field);

  const LieAlgebra& algebra() const { return *algebra_; }
  std::shared_ptr<const LieAlgebra> algebra_ptr() const { return algebra_; }
  const GaloisRing& ring() const { return ring_; }
  const FiniteField& field() const { return ring_.field(); }
  int p() const { return algebra_->p(); }
  int degree() const { return d_; }
  int rank() const { return r_; }
  int max_order() const { return algebra_->max_order(); }
  // |g (x) kappa|-style count: q^{sum n_i}.
  std::uint64_t size() const;

  LieElement zero() const { return {std::vector<std::int64_t>(r_ * d_, 0)}; }
  LieElement from_index(std::uint64_t index) const;
  std::uint64_t index(const LieElement& x) const;
  // From per-generator coefficient vectors (each of length <= d).
  LieElement from_coords(const std::vector<std::vector<std::int64_t>>& coords) const;
  std::vector<std::vector<std::int64_t>> coords(const LieElement& x) const;
  // Image of an element of g (integer coordinates).
  LieElement embed(const IntVector& x) const;
  RingElement coordinate(const LieElement& x, int i) const;

  bool is_zero(const LieElement& x) const;
  LieElement add(const LieElement& x, const LieElement& y) const;
  LieElement sub(const LieElement& x, const LieElement& y) const;
  LieElement neg(const LieElement& x) const;
  LieElement scale(const LieElement& x, std::int64_t k) const;
  LieElement frobenius(const LieElement& x, int k = 1) const;
  LieElement bracket(const LieElement& x, const LieElement& y) const;
  // x o y = x + y + [x, y]/2
  LieElement bch(const LieElement& x, const LieElement& y) const;
  // sigma(g) o m o (-g)
  LieElement act(const LieElement& g, const LieElement& m) const;
  // sigma(g) o (-g)
  LieElement artin_schreier(const LieElement& g) const;
  bool is_central(const LieElement& x) const;
  // p^k x == 0
  bool annihilated_by_p_power(const LieElement& x, int k) const;

  std::int64_t half() const { return half_; }

 private:
  void reduce(LieElement& x) const;

  std::shared_ptr<const LieAlgebra> algebra_;
  GaloisRing ring_;
  int r_;
  int d_;
  std::int64_t top_;    // p^L
  std::int64_t half_;   // 1/2 mod p^L
  std::vector<std::int64_t> moduli_;
};

}  // namespace wildcount

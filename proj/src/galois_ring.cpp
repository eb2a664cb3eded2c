#include "wildcount/galois_ring.hpp"

#include "wildcount/error.hpp"

#include <string>

namespace wildcount {

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t g = m, x = 0, x1 = 1, a1 = mod_floor(a, m);
  while (a1 != 0) {
    std::int64_t q = g / a1;
    std::int64_t t = g - q * a1;
    g = a1;
    a1 = t;
    t = x - q * x1;
    x = x1;
    x1 = t;
  }
  if (g != 1) throw UserError(std::to_string(a) + " is not invertible mod " + std::to_string(m));
  return mod_floor(x, m);
}

GaloisRing::GaloisRing(FiniteField field, int n) : field_(std::move(field)), n_(n) {
  if (n < 1) throw UserError("Witt length must be at least 1");
  pn_ = 1;
  for (int i = 0; i < n; ++i) {
    pn_ *= field_.p();
    if (pn_ > (std::int64_t{1} << 31)) throw UserError("p^n too large for the ring model");
  }
  const int d = degree();
  modulus_.assign(field_.modulus().begin(), field_.modulus().end());

  // Newton iteration for the root of the modulus lifting X^p.
  RingElement y = lift(field_.pow(field_.generator(), static_cast<std::uint64_t>(p())));
  auto eval = [&](const std::vector<std::int64_t>& f, const RingElement& at) {
    RingElement acc = zero();
    for (int j = static_cast<int>(f.size()) - 1; j >= 0; --j) acc = add(mul(acc, at), from_int(f[j]));
    return acc;
  };
  std::vector<std::int64_t> deriv(d);
  for (int j = 1; j <= d; ++j) deriv[j - 1] = modulus_[j] * j;
  for (int it = 0; it < n; ++it) y = sub(y, mul(eval(modulus_, y), inverse(eval(deriv, y))));
  if (!is_zero(eval(modulus_, y))) throw InvariantViolation("Frobenius lift is not a root");
  frob_image_ = y;

  frob_powers_.assign(d, std::vector<RingElement>(d));
  for (int j = 0; j < d; ++j) {
    RingElement e = zero();
    e.c[j] = 1;
    frob_powers_[0][j] = e;
  }
  if (d > 1) {
    RingElement acc = one();
    for (int j = 0; j < d; ++j) {
      frob_powers_[1][j] = acc;
      acc = mul(acc, y);
    }
    for (int k = 2; k < d; ++k)
      for (int j = 0; j < d; ++j) frob_powers_[k][j] = apply_matrix(frob_powers_[1], frob_powers_[k - 1][j]);
  }
}

std::uint64_t GaloisRing::size() const {
  std::uint64_t s = 1;
  for (int j = 0; j < degree(); ++j) s *= static_cast<std::uint64_t>(pn_);
  return s;
}

RingElement GaloisRing::one() const {
  RingElement r = zero();
  r.c[0] = 1 % pn_;
  return r;
}

RingElement GaloisRing::from_int(std::int64_t k) const {
  RingElement r = zero();
  r.c[0] = mod_floor(k, pn_);
  return r;
}

RingElement GaloisRing::from_coeffs(std::vector<std::int64_t> coeffs) const {
  if (static_cast<int>(coeffs.size()) > degree()) return reduce_product(std::move(coeffs));
  coeffs.resize(degree(), 0);
  for (auto& v : coeffs) v = mod_floor(v, pn_);
  return {std::move(coeffs)};
}

RingElement GaloisRing::from_index(std::uint64_t index) const {
  RingElement r = zero();
  for (int j = 0; j < degree(); ++j) {
    r.c[j] = static_cast<std::int64_t>(index % static_cast<std::uint64_t>(pn_));
    index /= static_cast<std::uint64_t>(pn_);
  }
  return r;
}

std::uint64_t GaloisRing::index(const RingElement& x) const {
  std::uint64_t idx = 0;
  for (int j = degree() - 1; j >= 0; --j) idx = idx * static_cast<std::uint64_t>(pn_) + x.c[j];
  return idx;
}

RingElement GaloisRing::generator() const {
  if (degree() == 1) return from_int(-modulus_[0]);
  RingElement r = zero();
  r.c[1] = 1;
  return r;
}

RingElement GaloisRing::add(const RingElement& x, const RingElement& y) const {
  RingElement r = x;
  for (int j = 0; j < degree(); ++j) {
    r.c[j] += y.c[j];
    if (r.c[j] >= pn_) r.c[j] -= pn_;
  }
  return r;
}

RingElement GaloisRing::sub(const RingElement& x, const RingElement& y) const {
  RingElement r = x;
  for (int j = 0; j < degree(); ++j) {
    r.c[j] -= y.c[j];
    if (r.c[j] < 0) r.c[j] += pn_;
  }
  return r;
}

RingElement GaloisRing::neg(const RingElement& x) const { return sub(zero(), x); }

RingElement GaloisRing::scale(const RingElement& x, std::int64_t k) const {
  std::int64_t km = mod_floor(k, pn_);
  RingElement r = x;
  for (auto& v : r.c) v = v * km % pn_;
  return r;
}

RingElement GaloisRing::reduce_product(std::vector<std::int64_t> prod) const {
  const int d = degree();
  for (auto& v : prod) v = mod_floor(v, pn_);
  for (int top = static_cast<int>(prod.size()) - 1; top >= d; --top) {
    std::int64_t c = prod[top];
    if (c == 0) continue;
    prod[top] = 0;
    for (int j = 0; j < d; ++j)
      prod[top - d + j] = mod_floor(prod[top - d + j] - c * modulus_[j] % pn_, pn_);
  }
  prod.resize(d, 0);
  return {std::move(prod)};
}

RingElement GaloisRing::mul(const RingElement& x, const RingElement& y) const {
  const int d = degree();
  if (d == 1) return {{x.c[0] * y.c[0] % pn_}};
  std::vector<std::int64_t> prod(2 * d - 1, 0);
  for (int i = 0; i < d; ++i) {
    if (x.c[i] == 0) continue;
    for (int j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + x.c[i] * y.c[j]) % pn_;
  }
  return reduce_product(std::move(prod));
}

RingElement GaloisRing::pow(RingElement x, std::uint64_t e) const {
  RingElement r = one();
  for (; e > 0; e >>= 1) {
    if (e & 1) r = mul(r, x);
    x = mul(x, x);
  }
  return r;
}

RingElement GaloisRing::inverse(const RingElement& x) const {
  FieldElement r = residue(x);
  if (r == field_.zero()) throw UserError("element of the Galois ring is not a unit");
  RingElement u = lift(field_.inv(r));
  const RingElement two = from_int(2);
  for (int it = 0; it < n_; ++it) u = mul(u, sub(two, mul(x, u)));
  return u;
}

bool GaloisRing::is_zero(const RingElement& x) const {
  for (auto v : x.c)
    if (v != 0) return false;
  return true;
}

RingElement GaloisRing::apply_matrix(const std::vector<RingElement>& columns, const RingElement& x) const {
  RingElement r = zero();
  for (int j = 0; j < degree(); ++j) {
    if (x.c[j] == 0) continue;
    for (int i = 0; i < degree(); ++i) r.c[i] = (r.c[i] + x.c[j] * columns[j].c[i]) % pn_;
  }
  return r;
}

RingElement GaloisRing::frobenius(const RingElement& x, int k) const {
  const int d = degree();
  int t = ((k % d) + d) % d;
  if (t == 0) return x;
  return apply_matrix(frob_powers_[t], x);
}

RingElement GaloisRing::teichmuller(FieldElement a) const {
  RingElement t = lift(a);
  const std::uint64_t q = field_.size();
  for (int it = 0; it < n_; ++it) {
    RingElement next = pow(t, q);
    if (next == t) break;
    t = std::move(next);
  }
  return t;
}

bool GaloisRing::p_power_annihilates(const RingElement& x, int k) const {
  if (k >= n_) return true;
  std::int64_t pk = 1;
  for (int i = 0; i < k; ++i) pk *= p();
  return is_zero(scale(x, pk));
}

FieldElement GaloisRing::residue(const RingElement& x) const {
  std::vector<int> c(degree());
  for (int j = 0; j < degree(); ++j) c[j] = static_cast<int>(x.c[j] % p());
  return field_.from_coeffs(c);
}

RingElement GaloisRing::lift(FieldElement a) const {
  std::vector<int> c = field_.coeffs(a);
  return {std::vector<std::int64_t>(c.begin(), c.end())};
}

}  // namespace wildcount

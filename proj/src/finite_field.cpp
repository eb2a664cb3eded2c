#include "wildcount/finite_field.hpp"

#include "wildcount/error.hpp"

#include <algorithm>
#include <string>

namespace wildcount {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

namespace poly {

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly rem(const Poly& a, const Poly& m, int p) {
  Poly r = trim(a);
  Poly mm = trim(m);
  const int dm = static_cast<int>(mm.size()) - 1;
  // Leading coefficient inverse by Fermat.
  int lead = mm.back(), inv = 1;
  for (int e = p - 2, b = lead; e > 0; e >>= 1, b = b * b % p)
    if (e & 1) inv = inv * b % p;
  while (static_cast<int>(r.size()) - 1 >= dm && !r.empty()) {
    int shift = static_cast<int>(r.size()) - 1 - dm;
    int c = r.back() * inv % p;
    for (int j = 0; j <= dm; ++j) r[shift + j] = ((r[shift + j] - c * mm[j]) % p + p) % p;
    r = trim(std::move(r));
  }
  return r;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m, int p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  return rem(prod, m, p);
}

Poly powmod(const Poly& a, std::uint64_t e, const Poly& m, int p) {
  Poly result = rem(Poly{1}, m, p);
  Poly base = rem(a, m, p);
  for (; e > 0; e >>= 1) {
    if (e & 1) result = mulmod(result, base, m, p);
    base = mulmod(base, base, m, p);
  }
  return result;
}

Poly sub(const Poly& a, const Poly& b, int p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    int x = i < a.size() ? a[i] : 0;
    int y = i < b.size() ? b[i] : 0;
    r[i] = ((x - y) % p + p) % p;
  }
  return trim(std::move(r));
}

Poly gcd(Poly a, Poly b, int p) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool is_irreducible(const Poly& f, int p) {
  const int d = static_cast<int>(trim(f).size()) - 1;
  if (d < 1) return false;
  if (d == 1) return true;
  const Poly x{0, 1};
  // X^{p^e} mod f, by repeated p-th powering.
  auto frob_power = [&](int e) {
    Poly r = x;
    for (int i = 0; i < e; ++i) r = powmod(r, static_cast<std::uint64_t>(p), f, p);
    return r;
  };
  if (sub(frob_power(d), x, p) != Poly{}) return false;
  for (int e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    Poly g = gcd(f, sub(frob_power(e), x, p), p);
    if (g.size() > 1) return false;
  }
  return true;
}

}  // namespace poly

FiniteField FiniteField::create(int p, int d) {
  if (p == 2) throw UserError("characteristic 2 is not supported (p must be odd)");
  if (!is_prime(p)) throw UserError("p = " + std::to_string(p) + " is not prime");
  if (d < 1 || d > kMaxDegree)
    throw UserError("degree d = " + std::to_string(d) + " outside [1, 12]");
  std::vector<int> f(d + 1, 0);
  f[d] = 1;
  std::uint64_t count = 1;
  for (int i = 0; i < d; ++i) count *= static_cast<std::uint64_t>(p);
  for (std::uint64_t code = 0; code < count; ++code) {
    std::uint64_t c = code;
    for (int j = 0; j < d; ++j) {
      f[j] = static_cast<int>(c % p);
      c /= p;
    }
    if (poly::is_irreducible(f, p)) return FiniteField(p, f);
  }
  throw InvariantViolation("no irreducible polynomial found");
}

FiniteField::FiniteField(int p, std::vector<int> modulus) : p_(p), modulus_(std::move(modulus)) {
  if (p == 2) throw UserError("characteristic 2 is not supported (p must be odd)");
  if (!is_prime(p)) throw UserError("p = " + std::to_string(p) + " is not prime");
  d_ = static_cast<int>(modulus_.size()) - 1;
  if (d_ < 1 || d_ > kMaxDegree) throw UserError("modulus degree outside [1, 12]");
  if (modulus_.back() != 1) throw UserError("modulus must be monic");
  for (int c : modulus_)
    if (c < 0 || c >= p) throw UserError("modulus coefficients must lie in [0, p)");
  if (!poly::is_irreducible(modulus_, p)) throw UserError("modulus is not irreducible");
  pow_p_.resize(d_ + 1);
  pow_p_[0] = 1;
  for (int j = 1; j <= d_; ++j) pow_p_[j] = pow_p_[j - 1] * static_cast<std::uint32_t>(p);
  q_ = pow_p_[d_];
  build_tables();
  frob_basis_.resize(d_);
  FieldElement x = generator();
  FieldElement xp = pow(x, static_cast<std::uint64_t>(p));
  FieldElement acc = one();
  for (int j = 0; j < d_; ++j) {
    frob_basis_[j] = acc;
    acc = mul(acc, xp);
  }
}

void FiniteField::build_tables() {
  constexpr std::uint32_t kTableLimit = 1u << 22;
  if (q_ > kTableLimit) return;
  // Find a primitive element by brute force on the order.
  std::vector<std::uint32_t> prime_factors;
  std::uint32_t n = q_ - 1;
  for (std::uint32_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      prime_factors.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) prime_factors.push_back(n);
  for (std::uint32_t g = 1; g < q_; ++g) {
    FieldElement cand{g};
    bool primitive = true;
    for (auto f : prime_factors) {
      if (pow(cand, (q_ - 1) / f) == one()) {
        primitive = false;
        break;
      }
    }
    if (!primitive) continue;
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    FieldElement acc = one();
    for (std::uint32_t i = 0; i + 1 < q_; ++i) {
      exp_[i] = acc.code;
      log_[acc.code] = i;
      acc = mul_poly(acc, cand);
    }
    return;
  }
}

FieldElement FiniteField::from_int(std::int64_t k) const {
  return {static_cast<std::uint32_t>(((k % p_) + p_) % p_)};
}

FieldElement FiniteField::from_coeffs(std::span<const int> coeffs) const {
  std::vector<int> c(coeffs.begin(), coeffs.end());
  if (static_cast<int>(c.size()) > d_) c = poly::rem(c, modulus_, p_);
  std::uint32_t code = 0;
  for (int j = static_cast<int>(c.size()) - 1; j >= 0; --j)
    code = code * p_ + static_cast<std::uint32_t>(((c[j] % p_) + p_) % p_);
  return {code};
}

FieldElement FiniteField::generator() const {
  if (d_ == 1) return from_int(-modulus_[0]);  // root of X + c
  return {static_cast<std::uint32_t>(p_)};
}

std::vector<int> FiniteField::coeffs(FieldElement x) const {
  std::vector<int> c(d_);
  for (int j = 0; j < d_; ++j) {
    c[j] = static_cast<int>(x.code % p_);
    x.code /= p_;
  }
  return c;
}

FieldElement FiniteField::add(FieldElement x, FieldElement y) const {
  std::uint32_t r = 0;
  for (int j = 0; j < d_; ++j) {
    std::uint32_t s = (x.code % p_ + y.code % p_) % p_;
    r += s * pow_p_[j];
    x.code /= p_;
    y.code /= p_;
  }
  return {r};
}

FieldElement FiniteField::neg(FieldElement x) const {
  std::uint32_t r = 0;
  for (int j = 0; j < d_; ++j) {
    std::uint32_t c = x.code % p_;
    r += ((p_ - c) % p_) * pow_p_[j];
    x.code /= p_;
  }
  return {r};
}

FieldElement FiniteField::sub(FieldElement x, FieldElement y) const { return add(x, neg(y)); }

FieldElement FiniteField::mul_poly(FieldElement x, FieldElement y) const {
  std::vector<int> a = coeffs(x), b = coeffs(y);
  return from_coeffs(poly::mulmod(poly::trim(a), poly::trim(b), modulus_, p_));
}

FieldElement FiniteField::mul(FieldElement x, FieldElement y) const {
  if (x.code == 0 || y.code == 0) return zero();
  if (exp_.empty()) return mul_poly(x, y);
  std::uint64_t s = static_cast<std::uint64_t>(log_[x.code]) + log_[y.code];
  return {exp_[s % (q_ - 1)]};
}

FieldElement FiniteField::pow(FieldElement x, std::uint64_t e) const {
  FieldElement r = one();
  for (; e > 0; e >>= 1) {
    if (e & 1) r = exp_.empty() ? mul_poly(r, x) : mul(r, x);
    x = exp_.empty() ? mul_poly(x, x) : mul(x, x);
  }
  return r;
}

FieldElement FiniteField::inv(FieldElement x) const {
  if (x.code == 0) throw UserError("inverse of zero in GF(" + std::to_string(q_) + ")");
  return pow(x, q_ - 2);
}

FieldElement FiniteField::frobenius(FieldElement x, int times) const {
  int t = ((times % d_) + d_) % d_;
  for (int s = 0; s < t; ++s) {
    FieldElement r = zero();
    std::uint32_t code = x.code;
    for (int j = 0; j < d_; ++j) {
      int c = static_cast<int>(code % p_);
      code /= p_;
      if (c != 0) r = add(r, mul(from_int(c), frob_basis_[j]));
    }
    x = r;
  }
  return x;
}

int FiniteField::trace(FieldElement x) const {
  FieldElement acc = zero();
  FieldElement y = x;
  for (int i = 0; i < d_; ++i) {
    acc = add(acc, y);
    y = frobenius(y);
  }
  if (!in_prime_field(acc)) throw InvariantViolation("trace left the prime field");
  return static_cast<int>(acc.code);
}

std::vector<FieldElement> FiniteField::elements() const {
  std::vector<FieldElement> out(q_);
  for (std::uint32_t i = 0; i < q_; ++i) out[i] = {i};
  return out;
}

}  // namespace wildcount

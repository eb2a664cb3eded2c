#include "wildcount/lie_base_change.hpp"

#include "wildcount/error.hpp"

namespace wildcount {

LieBaseChange::LieBaseChange(std::shared_ptr<const LieAlgebra> algebra, const FiniteField& field)
    : algebra_(std::move(algebra)),
      ring_(field, algebra_->max_order()),
      r_(algebra_->rank()),
      d_(field.degree()) {
  if (field.p() != algebra_->p()) throw UserError("field and algebra have different characteristic");
  top_ = ring_.characteristic();
  half_ = inverse_mod(2, top_);
  for (int i = 0; i < r_; ++i) moduli_.push_back(algebra_->modulus(i));
}

std::uint64_t LieBaseChange::size() const {
  std::uint64_t s = 1;
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < d_; ++j) s *= static_cast<std::uint64_t>(moduli_[i]);
  return s;
}

LieElement LieBaseChange::from_index(std::uint64_t index) const {
  LieElement x = zero();
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < d_; ++j) {
      auto m = static_cast<std::uint64_t>(moduli_[i]);
      x.c[i * d_ + j] = static_cast<std::int64_t>(index % m);
      index /= m;
    }
  return x;
}

std::uint64_t LieBaseChange::index(const LieElement& x) const {
  std::uint64_t idx = 0;
  for (int i = r_ - 1; i >= 0; --i)
    for (int j = d_ - 1; j >= 0; --j) idx = idx * static_cast<std::uint64_t>(moduli_[i]) + x.c[i * d_ + j];
  return idx;
}

LieElement LieBaseChange::from_coords(const std::vector<std::vector<std::int64_t>>& coords) const {
  if (static_cast<int>(coords.size()) != r_)
    throw UserError("element needs " + std::to_string(r_) + " coordinates, got " + std::to_string(coords.size()));
  LieElement x = zero();
  for (int i = 0; i < r_; ++i) {
    if (static_cast<int>(coords[i].size()) > d_)
      throw UserError("coordinate " + std::to_string(i) + " has more than " + std::to_string(d_) + " coefficients");
    for (std::size_t j = 0; j < coords[i].size(); ++j) x.c[i * d_ + j] = coords[i][j];
  }
  reduce(x);
  return x;
}

std::vector<std::vector<std::int64_t>> LieBaseChange::coords(const LieElement& x) const {
  std::vector<std::vector<std::int64_t>> out(r_);
  for (int i = 0; i < r_; ++i) out[i].assign(x.c.begin() + i * d_, x.c.begin() + (i + 1) * d_);
  return out;
}

LieElement LieBaseChange::embed(const IntVector& x) const {
  LieElement y = zero();
  for (int i = 0; i < r_; ++i) y.c[i * d_] = x[i];
  reduce(y);
  return y;
}

RingElement LieBaseChange::coordinate(const LieElement& x, int i) const {
  return {std::vector<std::int64_t>(x.c.begin() + i * d_, x.c.begin() + (i + 1) * d_)};
}

void LieBaseChange::reduce(LieElement& x) const {
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < d_; ++j) x.c[i * d_ + j] = mod_floor(x.c[i * d_ + j], moduli_[i]);
}

bool LieBaseChange::is_zero(const LieElement& x) const {
  for (auto v : x.c)
    if (v != 0) return false;
  return true;
}

LieElement LieBaseChange::add(const LieElement& x, const LieElement& y) const {
  LieElement r = x;
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < d_; ++j) {
      auto& v = r.c[i * d_ + j];
      v += y.c[i * d_ + j];
      if (v >= moduli_[i]) v -= moduli_[i];
    }
  return r;
}

LieElement LieBaseChange::sub(const LieElement& x, const LieElement& y) const {
  LieElement r = x;
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < d_; ++j) {
      auto& v = r.c[i * d_ + j];
      v -= y.c[i * d_ + j];
      if (v < 0) v += moduli_[i];
    }
  return r;
}

LieElement LieBaseChange::neg(const LieElement& x) const { return sub(zero(), x); }

LieElement LieBaseChange::scale(const LieElement& x, std::int64_t k) const {
  LieElement r = x;
  for (int i = 0; i < r_; ++i) {
    std::int64_t km = mod_floor(k, moduli_[i]);
    for (int j = 0; j < d_; ++j) r.c[i * d_ + j] = r.c[i * d_ + j] * km % moduli_[i];
  }
  return r;
}

LieElement LieBaseChange::frobenius(const LieElement& x, int k) const {
  if (d_ == 1 || k % d_ == 0) return x;
  LieElement r = zero();
  for (int i = 0; i < r_; ++i) {
    RingElement y = ring_.frobenius(coordinate(x, i), k);
    for (int j = 0; j < d_; ++j) r.c[i * d_ + j] = y.c[j];
  }
  reduce(r);
  return r;
}

LieElement LieBaseChange::bracket(const LieElement& x, const LieElement& y) const {
  LieElement out = zero();
  for (const auto& bc : algebra_->nonzero_brackets()) {
    RingElement w = ring_.sub(ring_.mul(coordinate(x, bc.i), coordinate(y, bc.j)),
                              ring_.mul(coordinate(x, bc.j), coordinate(y, bc.i)));
    if (ring_.is_zero(w)) continue;
    for (int k = 0; k < r_; ++k) {
      if (bc.value[k] == 0) continue;
      for (int j = 0; j < d_; ++j) {
        auto& v = out.c[k * d_ + j];
        v = (v + w.c[j] % moduli_[k] * bc.value[k]) % moduli_[k];
      }
    }
  }
  return out;
}

LieElement LieBaseChange::bch(const LieElement& x, const LieElement& y) const {
  LieElement s = add(x, y);
  if (algebra_->is_abelian()) return s;
  return add(s, scale(bracket(x, y), half_));
}

LieElement LieBaseChange::act(const LieElement& g, const LieElement& m) const {
  return bch(bch(frobenius(g), m), neg(g));
}

LieElement LieBaseChange::artin_schreier(const LieElement& g) const { return bch(frobenius(g), neg(g)); }

bool LieBaseChange::is_central(const LieElement& x) const {
  for (int k = 0; k < r_; ++k) {
    IntVector e(r_, 0);
    e[k] = 1;
    if (!is_zero(bracket(x, embed(e)))) return false;
  }
  return true;
}

bool LieBaseChange::annihilated_by_p_power(const LieElement& x, int k) const {
  if (k >= max_order()) return true;
  std::int64_t pk = 1;
  for (int i = 0; i < k; ++i) pk *= p();
  return is_zero(scale(x, pk));
}

}  // namespace wildcount

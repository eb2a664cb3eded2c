#include "wildcount/lie_algebra.hpp"

#include "wildcount/error.hpp"
#include "wildcount/finite_field.hpp"
#include "wildcount/galois_ring.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <unordered_set>

namespace wildcount {

namespace {

std::int64_t power(std::int64_t p, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

std::string pair_name(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

// Bracket from raw structure constants; used before the spec is validated.
IntVector raw_bracket(const LieAlgebraSpec& spec, const std::vector<std::int64_t>& moduli,
                      const IntVector& x, const IntVector& y) {
  const std::int64_t top = *std::max_element(moduli.begin(), moduli.end());
  IntVector out(spec.orders.size(), 0);
  for (const auto& bc : spec.brackets) {
    std::int64_t w = mod_floor(mod_floor(x[bc.i] * y[bc.j], top) - mod_floor(x[bc.j] * y[bc.i], top), top);
    if (w == 0) continue;
    for (std::size_t k = 0; k < out.size(); ++k)
      out[k] = mod_floor(out[k] + w * mod_floor(bc.value[k], moduli[k]), moduli[k]);
  }
  return out;
}

bool all_zero(const IntVector& x) {
  return std::all_of(x.begin(), x.end(), [](std::int64_t v) { return v == 0; });
}

}  // namespace

std::optional<std::string> check_spec(const LieAlgebraSpec& spec) {
  if (spec.p == 2) return "characteristic 2 is not supported (p must be odd)";
  if (!is_prime(spec.p)) return "p = " + std::to_string(spec.p) + " is not prime";
  if (spec.orders.empty()) return "algebra needs at least one cyclic factor";
  const int r = static_cast<int>(spec.orders.size());
  std::vector<std::int64_t> moduli(r);
  for (int i = 0; i < r; ++i) {
    if (spec.orders[i] < 1) return "order of generator " + std::to_string(i) + " must be positive";
    std::int64_t m = 1;
    for (int e = 0; e < spec.orders[i]; ++e) {
      m *= spec.p;
      if (m > (std::int64_t{1} << 31)) return "order of generator " + std::to_string(i) + " too large";
    }
    moduli[i] = m;
  }
  std::set<std::pair<int, int>> seen;
  for (const auto& bc : spec.brackets) {
    if (bc.i < 0 || bc.j >= r || bc.i >= bc.j)
      return "bracket index pair " + pair_name(bc.i, bc.j) + " must satisfy 0 <= i < j < rank";
    if (!seen.insert({bc.i, bc.j}).second) return "bracket " + pair_name(bc.i, bc.j) + " given twice";
    if (static_cast<int>(bc.value.size()) != r)
      return "bracket " + pair_name(bc.i, bc.j) + " value must have " + std::to_string(r) + " coordinates";
    const int low = std::min(spec.orders[bc.i], spec.orders[bc.j]);
    for (int k = 0; k < r; ++k) {
      if (mod_floor(mod_floor(bc.value[k], moduli[k]) * power(spec.p, std::min(low, spec.orders[k])), moduli[k]) != 0)
        return "torsion incompatibility: p^" + std::to_string(low) + " * [e_" + std::to_string(bc.i) + ", e_" +
               std::to_string(bc.j) + "] != 0";
    }
  }
  auto basis = [&](int i) {
    IntVector e(r, 0);
    e[i] = 1;
    return e;
  };
  for (const auto& bc : spec.brackets) {
    for (int k = 0; k < r; ++k) {
      if (!all_zero(raw_bracket(spec, moduli, bc.value, basis(k))))
        return "class > 2: [[e_" + std::to_string(bc.i) + ", e_" + std::to_string(bc.j) + "], e_" +
               std::to_string(k) + "] != 0";
    }
  }
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c) {
        IntVector s(r, 0);
        for (auto [x, y, z] : {std::tuple{a, b, c}, std::tuple{b, c, a}, std::tuple{c, a, b}}) {
          IntVector t = raw_bracket(spec, moduli, raw_bracket(spec, moduli, basis(x), basis(y)), basis(z));
          for (int k = 0; k < r; ++k) s[k] = mod_floor(s[k] + t[k], moduli[k]);
        }
        if (!all_zero(s))
          return "Jacobi identity fails on (" + std::to_string(a) + "," + std::to_string(b) + "," +
                 std::to_string(c) + ")";
      }
  return std::nullopt;
}

LieAlgebra::LieAlgebra(LieAlgebraSpec spec) : spec_(std::move(spec)) {
  if (auto violation = check_spec(spec_)) throw UserError("invalid Lie algebra: " + *violation);
  max_order_ = *std::max_element(spec_.orders.begin(), spec_.orders.end());
  for (int n : spec_.orders) moduli_.push_back(power(spec_.p, n));
  for (auto& bc : spec_.brackets) {
    bc.value = reduce(bc.value);
    if (!all_zero(bc.value)) nonzero_brackets_.push_back(bc);
  }
}

LieAlgebra LieAlgebra::abelian(int p, std::vector<int> orders) {
  return LieAlgebra(LieAlgebraSpec{p, std::move(orders), {}});
}

LieAlgebra LieAlgebra::heisenberg(int p, int k) {
  if (k < 1) throw UserError("Heisenberg rank k must be positive");
  LieAlgebraSpec spec{p, std::vector<int>(2 * k + 1, 1), {}};
  for (int i = 0; i < k; ++i) {
    IntVector z(2 * k + 1, 0);
    z[2 * k] = 1;
    spec.brackets.push_back({i, k + i, z});
  }
  return LieAlgebra(std::move(spec));
}

int LieAlgebra::log_size() const {
  int s = 0;
  for (int n : spec_.orders) s += n;
  return s;
}

IntVector LieAlgebra::reduce(IntVector x) const {
  for (int i = 0; i < rank(); ++i) x[i] = mod_floor(x[i], moduli_[i]);
  return x;
}

IntVector LieAlgebra::bracket(const IntVector& x, const IntVector& y) const {
  return raw_bracket(spec_, moduli_, x, y);
}

IntVector LieAlgebra::add(const IntVector& x, const IntVector& y) const {
  IntVector r(rank());
  for (int i = 0; i < rank(); ++i) r[i] = (x[i] + y[i]) % moduli_[i];
  return r;
}

IntVector LieAlgebra::scale(const IntVector& x, std::int64_t k) const {
  IntVector r(rank());
  for (int i = 0; i < rank(); ++i) r[i] = mod_floor(mod_floor(k, moduli_[i]) * x[i], moduli_[i]);
  return r;
}

bool LieAlgebra::is_zero(const IntVector& x) const { return all_zero(x); }

bool LieAlgebra::is_central(const IntVector& x) const {
  for (int k = 0; k < rank(); ++k) {
    IntVector e(rank(), 0);
    e[k] = 1;
    if (!all_zero(bracket(x, e))) return false;
  }
  return true;
}

namespace {

struct Enumerator {
  const LieAlgebra& g;
  std::uint64_t size = 1;

  explicit Enumerator(const LieAlgebra& alg) : g(alg) {
    for (int i = 0; i < g.rank(); ++i) size *= static_cast<std::uint64_t>(g.modulus(i));
  }
  IntVector element(std::uint64_t idx) const {
    IntVector x(g.rank());
    for (int i = 0; i < g.rank(); ++i) {
      x[i] = static_cast<std::int64_t>(idx % static_cast<std::uint64_t>(g.modulus(i)));
      idx /= static_cast<std::uint64_t>(g.modulus(i));
    }
    return x;
  }
  std::uint64_t index(const IntVector& x) const {
    std::uint64_t idx = 0;
    for (int i = g.rank() - 1; i >= 0; --i) idx = idx * static_cast<std::uint64_t>(g.modulus(i)) + x[i];
    return idx;
  }
};

// Greedy generating set of the subgroup spanned by `elements`, and its size.
std::pair<std::vector<IntVector>, std::uint64_t> span_of(const LieAlgebra& g, const Enumerator& en,
                                                         const std::vector<IntVector>& elements) {
  std::unordered_set<std::uint64_t> span{en.index(IntVector(g.rank(), 0))};
  std::vector<IntVector> gens;
  for (const auto& x : elements) {
    if (span.count(en.index(x))) continue;
    gens.push_back(x);
    std::vector<std::uint64_t> current(span.begin(), span.end());
    IntVector multiple = x;
    while (!g.is_zero(multiple)) {
      for (auto s : current) span.insert(en.index(g.add(en.element(s), multiple)));
      multiple = g.add(multiple, x);
    }
  }
  return {gens, span.size()};
}

}  // namespace

Subobjects LieAlgebra::subobjects() const {
  Enumerator en(*this);
  check_scale("subobject enumeration", static_cast<long double>(en.size), 1e7L);
  Subobjects out;
  std::vector<IntVector> center, torsion;
  for (std::uint64_t idx = 0; idx < en.size; ++idx) {
    IntVector x = en.element(idx);
    if (is_central(x)) center.push_back(x);
    if (is_zero(scale(x, p()))) torsion.push_back(x);
  }
  out.center_size = center.size();
  out.p_torsion_size = torsion.size();
  std::tie(out.center_generators, std::ignore) = span_of(*this, en, center);
  std::tie(out.p_torsion_generators, std::ignore) = span_of(*this, en, torsion);
  std::vector<IntVector> values;
  for (const auto& bc : nonzero_brackets_) values.push_back(bc.value);
  std::tie(out.derived_generators, out.derived_size) = span_of(*this, en, values);

  std::uint64_t t = out.p_torsion_size;
  while (t > 1) {
    t /= static_cast<std::uint64_t>(p());
    ++out.r;
  }
  out.p_torsion_abelian = true;
  for (const auto& x : out.p_torsion_generators)
    for (const auto& y : out.p_torsion_generators)
      if (!is_zero(bracket(x, y))) out.p_torsion_abelian = false;

  out.better_bound_hypothesis = true;
  std::int64_t pk = 1;
  for (int k = 1; k <= max_order_; ++k) {
    pk *= p();
    std::set<std::uint64_t> multiples_of_g, center_multiples, meet;
    for (std::uint64_t idx = 0; idx < en.size; ++idx) multiples_of_g.insert(en.index(scale(en.element(idx), pk)));
    for (const auto& z : center) {
      center_multiples.insert(en.index(scale(z, pk)));
      if (multiples_of_g.count(en.index(z))) meet.insert(en.index(z));
    }
    if (meet != center_multiples) out.better_bound_hypothesis = false;
  }
  return out;
}

}  // namespace wildcount

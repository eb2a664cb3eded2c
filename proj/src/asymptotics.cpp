#include "wildcount/asymptotics.hpp"

#include "wildcount/error.hpp"
#include "wildcount/lie_base_change.hpp"
#include "wildcount/local_count.hpp"

#include <boost/integer/common_factor.hpp>

#include <algorithm>
#include <memory>

namespace wildcount {

namespace {

int moebius(int n) {
  int result = 1;
  for (int f = 2; f * f <= n; ++f) {
    if (n % f != 0) continue;
    n /= f;
    if (n % f == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

std::int64_t lattice_of(const LieAlgebra& algebra) { return ipow(algebra.p(), algebra.log_size()); }

}  // namespace

BigInt places_of_degree(std::uint64_t q, int deg) {
  if (deg < 1) throw UserError("place degree must be positive");
  if (deg == 1) return BigInt(q) + 1;
  BigInt sum = 0;
  for (int e = 1; e <= deg; ++e) {
    if (deg % e != 0) continue;
    sum += moebius(e) * boost::multiprecision::pow(BigInt(q), deg / e);
  }
  if (sum % deg != 0) throw InvariantViolation("necklace count is not an integer");
  return sum / deg;
}

RationalSeries series_multiply(const RationalSeries& a, const RationalSeries& b) {
  if (a.K != b.K) throw InvariantViolation("series on different lattices");
  const std::size_t n = std::min(a.coeffs.size(), b.coeffs.size());
  RationalSeries out{a.K, std::vector<BigInt>(n, 0)};
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j)
      if (b.coeffs[j] != 0) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return out;
}

RationalSeries series_power(RationalSeries base, BigInt e) {
  RationalSeries result{base.K, std::vector<BigInt>(base.coeffs.size(), 0)};
  if (!result.coeffs.empty()) result.coeffs[0] = 1;
  while (e > 0) {
    if ((e & 1) != 0) result = series_multiply(result, base);
    e >>= 1;
    if (e > 0) base = series_multiply(base, base);
  }
  return result;
}

RationalSeries series_substitute(const RationalSeries& a, int deg, std::size_t length) {
  RationalSeries out{a.K, std::vector<BigInt>(length, 0)};
  for (std::size_t j = 0; j < a.coeffs.size() && j * deg < length; ++j) out.coeffs[j * deg] = a.coeffs[j];
  return out;
}

RationalSeries local_series(const LieAlgebra& algebra, int field_degree, int deg, const Rational& vmax, int jobs) {
  auto alg = std::make_shared<const LieAlgebra>(algebra);
  auto lie = std::make_shared<const LieBaseChange>(alg, FiniteField::create(algebra.p(), field_degree * deg));
  const std::int64_t K = lattice_of(algebra);
  RationalSeries s{K, std::vector<BigInt>(floor_of(vmax * K) + 1, 0)};
  for (const auto& row : jump_distribution(lie, vmax, jobs)) {
    Rational index = row.jump * K;
    if (index.denominator() != 1)
      throw InvariantViolation("last jump " + to_fraction(row.jump) + " is off the 1/" + std::to_string(K) +
                               " lattice");
    s.coeffs[index.numerator()] += row.count;
  }
  return s;
}

RationalSeries euler_product(const LieAlgebra& algebra, int field_degree, const Rational& nmax, int jobs) {
  const std::int64_t K = lattice_of(algebra);
  if (nmax <= Rational(0)) throw UserError("nmax must be positive");
  if (nmax * K > Rational(100000)) throw UserError("nmax * |g| exceeds the 10^5 lattice-point bound");
  const std::size_t length = floor_of(nmax * K) + 1;
  const std::uint64_t q = ipow(algebra.p(), field_degree);
  RationalSeries total{K, std::vector<BigInt>(length, 0)};
  total.coeffs[0] = 1;
  for (int deg = 1; Rational(deg) <= nmax; ++deg) {
    RationalSeries local = local_series(algebra, field_degree, deg, nmax / deg, jobs);
    total = series_multiply(total, series_power(series_substitute(local, deg, length), places_of_degree(q, deg)));
  }
  return total;
}

AsymptoticsReport analytic_constants(const AsymptoticsInput& input) {
  if (input.lattice < 1) throw UserError("lattice denominator must be positive");
  AsymptoticsReport report;
  bool any = false;
  for (const auto& row : input.rows) {
    if (row.n <= Rational(0)) throw UserError("row index n must be positive");
    if ((row.n * input.lattice).denominator() != 1)
      throw UserError("row index " + to_fraction(row.n) + " is not on the 1/" + std::to_string(input.lattice) +
                      " lattice");
    if (row.b == 0) continue;
    Rational ratio = (row.e + 1) / row.n;
    if (!any || ratio > report.A) report.A = ratio;
    any = true;
  }
  if (!any) throw UserError("every b_n is zero");
  std::int64_t num_lcm = 1, den_gcd = 0;
  for (const auto& row : input.rows) {
    if (row.b == 0 || (row.e + 1) / row.n != report.A) continue;
    report.S.push_back(row.n);
    report.B += row.b;
    num_lcm = boost::integer::lcm(num_lcm, row.n.numerator());
    den_gcd = boost::integer::gcd(den_gcd, row.n.denominator());
  }
  std::sort(report.S.begin(), report.S.end());
  report.S.erase(std::unique(report.S.begin(), report.S.end()), report.S.end());
  report.M = Rational(num_lcm, den_gcd);

  std::optional<Rational> sup = input.tail_bound;
  for (const auto& row : input.rows) {
    if (!row.k) continue;
    Rational ratio = (*row.k + 1) / row.n;
    if (!sup || ratio > *sup) sup = ratio;
  }
  report.hypothesis_ok = !sup || *sup < report.A;
  if (!input.tail_bound) report.flags.push_back("tail rows beyond the table were not inspected");
  return report;
}

AsymptoticsInput heisenberg_table(int p, int k) {
  if (p == 2 || !is_prime(p)) throw UserError("p must be an odd prime");
  if (k < 1) throw UserError("k must be positive");
  AsymptoticsInput in;
  in.lattice = ipow(p, 2 * k + 1);
  for (int m = 0; m < k; ++m)
    in.rows.push_back({Rational(1) + rpow(p, -m - 1), 1, Rational(2 * k + 1 - m), Rational(2 * k - m)});
  std::uint64_t isotropic = 1;
  for (int i = 1; i <= k; ++i) isotropic *= static_cast<std::uint64_t>(ipow(p, i) + 1);
  in.rows.push_back({Rational(1), isotropic, Rational(k + 1), Rational(k)});
  return in;
}

AsymptoticsReport heisenberg_constants(int p, int k) {
  AsymptoticsReport report = analytic_constants(heisenberg_table(p, k));
  std::uint64_t expected = 1;
  if (p == 3 && k == 1) {
    expected = 5;
  } else if (p == 3) {
    for (int m = 0; ipow(3, m + 2) + 2 * m - 1 <= 4 * k; ++m)
      if (ipow(3, m + 2) + 2 * m - 1 == 4 * static_cast<std::int64_t>(k)) expected = 2;
  }
  if (report.B != expected)
    throw InvariantViolation("B = " + std::to_string(report.B) + " for (p, k) = (" + std::to_string(p) + ", " +
                             std::to_string(k) + "), expected " + std::to_string(expected));
  return report;
}

AsymptoticsReport torsion_growth_constants(const LieAlgebra& algebra) {
  const Subobjects sub = algebra.subobjects();
  const int p = algebra.p();
  const int r = sub.r;
  AsymptoticsInput in;
  in.lattice = lattice_of(algebra);
  if (sub.p_torsion_abelian)
    in.rows.push_back({Rational(1), 1, Rational(r), Rational(0)});
  else
    in.rows.push_back({Rational(1) + rpow(p, -1), 1, Rational(r), Rational(r - 1)});
  AsymptoticsReport report = analytic_constants(in);
  const Rational M = sub.p_torsion_abelian ? Rational(1) : Rational(1) + rpow(p, -1);
  if (report.M != M || report.A != Rational(r + 1) / M || report.B != 1)
    throw InvariantViolation("growth constants disagree with (r+1)/M");
  if (!sub.p_torsion_abelian && r > p - 1)
    report.flags.push_back("g[p] is non-abelian with |g[p]| > p^(p-1); the growth rate is not established here");
  return report;
}

}  // namespace wildcount

#pragma once

#include "wildcount/lie_algebra.hpp"
#include "wildcount/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wildcount {

using BigInt = boost::multiprecision::cpp_int;

// Places of F_q(T) of degree deg, the place at infinity included.
BigInt places_of_degree(std::uint64_t q, int deg);

// sum_j coeffs[j] X^{j/K}, truncated after coeffs.size() terms.
struct RationalSeries {
  std::int64_t K = 1;
  std::vector<BigInt> coeffs;

  Rational exponent(std::size_t j) const { return Rational(static_cast<std::int64_t>(j), K); }
};

RationalSeries series_multiply(const RationalSeries& a, const RationalSeries& b);
RationalSeries series_power(RationalSeries base, BigInt e);
// X -> X^deg, truncated to `length` terms.
RationalSeries series_substitute(const RationalSeries& a, int deg, std::size_t length);

// Counts of local data by last jump n <= vmax over F_{q^deg} with q = p^field_degree,
// on the 1/|g| lattice.
RationalSeries local_series(const LieAlgebra& algebra, int field_degree, int deg, const Rational& vmax,
                            int jobs = 1);

// prod over places P of local_series(deg P)(X^{deg P}), truncated at X^nmax.
RationalSeries euler_product(const LieAlgebra& algebra, int field_degree, const Rational& nmax, int jobs = 1);

struct AsymptoticsRow {
  Rational n;
  std::uint64_t b = 0;
  Rational e;
  std::optional<Rational> k;  // absent means -infinity
};

struct AsymptoticsInput {
  std::int64_t lattice = 1;  // every n lies in (1/lattice) Z
  std::vector<AsymptoticsRow> rows;
  // Upper bound for (k_n + 1)/n over rows not listed, when known.
  std::optional<Rational> tail_bound;
};

struct AsymptoticsReport {
  Rational A;
  std::vector<Rational> S;
  std::uint64_t B = 0;
  Rational M;
  bool hypothesis_ok = false;
  std::vector<std::string> flags;
};

AsymptoticsReport analytic_constants(const AsymptoticsInput& input);

// Leading rows for h_k over F_p, checked against the known values of B.
AsymptoticsInput heisenberg_table(int p, int k);
AsymptoticsReport heisenberg_constants(int p, int k);

// A = (r+1)/M, B = 1, with r and M from the p-torsion of g.
AsymptoticsReport torsion_growth_constants(const LieAlgebra& algebra);

}  // namespace wildcount

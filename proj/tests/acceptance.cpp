// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "test_support.hpp"
#include "wildcount/asymptotics.hpp"
#include "wildcount/error.hpp"
#include "wildcount/heisenberg.hpp"

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

using namespace wildcount;
using namespace wildcount::testing;

namespace {

std::uint64_t upow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

struct Check {
  bool ok = true;
  std::ostringstream note;

  void expect(bool condition, const std::string& what) {
    if (!condition) {
      if (!ok) note << "; ";
      note << what;
      ok = false;
    }
  }
};

int failures = 0;

void criterion(int number, const std::string& title, const std::function<void(Check&)>& body) {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!c.ok) ++failures;
  std::ostringstream line;
  line << (c.ok ? "PASS" : "FAIL") << " criterion " << number << ": " << title;
  line.precision(1);
  line << std::fixed << " (" << seconds << " s)";
  if (!c.ok) line << ": " << c.note.str();
  std::cout << line.str() << std::endl;
}

struct Algebra {
  std::string name;
  LieAlgebra g;
};

std::vector<Algebra> small_algebras() {
  return {{"Z/3", LieAlgebra::abelian(3, {1})},
          {"Z/9", LieAlgebra::abelian(3, {2})},
          {"h_1", LieAlgebra::heisenberg(3, 1)},
          {"h_2", LieAlgebra::heisenberg(3, 2)}};
}

std::string run_cli(const std::string& args, int* code) {
  std::string cmd = std::string(WILDCOUNT_CLI) + " " + args + " 2>&1";
  std::string out;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) {
    *code = -1;
    return out;
  }
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  *code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

// Monic irreducible polynomials of degree deg over F_p, plus the place at infinity in degree 1.
std::uint64_t explicit_places(int p, int deg) {
  std::uint64_t total = upow(p, deg), count = deg == 1 ? 1 : 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<int> f(deg + 1, 0);
    f[deg] = 1;
    std::uint64_t c = code;
    for (int j = 0; j < deg; ++j, c /= p) f[j] = static_cast<int>(c % p);
    if (poly::is_irreducible(f, p)) ++count;
  }
  return count;
}

// Multiplies in one local factor per explicit place.
std::map<Rational, BigInt> direct_convolution(const LieAlgebra& g, const Rational& nmax) {
  auto alg = std::make_shared<const LieAlgebra>(g);
  std::map<Rational, BigInt> total{{Rational(0), 1}};
  for (int deg = 1; Rational(deg) <= nmax; ++deg) {
    auto lie = std::make_shared<const LieBaseChange>(alg, FiniteField::create(g.p(), deg));
    auto local = jump_distribution(lie, nmax / deg);
    for (std::uint64_t place = 0, places = explicit_places(g.p(), deg); place < places; ++place) {
      std::map<Rational, BigInt> next;
      for (const auto& [n, a] : total)
        for (const auto& row : local)
          if (n + row.jump * deg <= nmax) next[n + row.jump * deg] += a * row.count;
      total = std::move(next);
    }
  }
  std::erase_if(total, [](const auto& kv) { return kv.second == 0; });
  return total;
}

}  // namespace

int main() {
  criterion(1, "sum of mu_v(a) over a prime to p is ceil(v) - 1", [](Check& c) {
    for (int p : {3, 5})
      for (int k = 1; k <= 60; ++k) {
        const Rational v(k, 6);
        std::int64_t sum = 0;
        for (std::int64_t a = 1; Rational(a) < v; ++a)
          if (a % p != 0) sum += mu(v, a, p);
        c.expect(sum == ceil_of(v) - 1, "p=" + std::to_string(p) + " v=" + to_fraction(v));
      }
  });

  criterion(2, "exactly one datum has last jump < 1", [](Check& c) {
    for (const auto& [name, g] : small_algebras())
      for (int d : {1, 2}) {
        const std::uint64_t n = count_lastjump_lt(base_change(g, d), strictly(Rational(1)));
        c.expect(n == 1, name + " over F_" + std::to_string(upow(3, d)) + ": " + std::to_string(n));
      }
  });

  criterion(3, "count of data with last jump < 2 is |kappa|^r", [](Check& c) {
    for (const auto& [name, g] : small_algebras())
      for (int d : {1, 2}) {
        const int r = g.subobjects().r;
        const std::uint64_t n = count_lastjump_lt(base_change(g, d), strictly(Rational(2)));
        c.expect(n == upow(upow(3, d), r), name + " over F_" + std::to_string(upow(3, d)) + ": " + std::to_string(n));
      }
  });

  criterion(4, "h_k count below 1 + p^-m equals q |A_{k,m}(F_q)|", [](Check& c) {
    for (auto [k, d] : {std::pair{1, 1}, {1, 2}, {2, 1}}) {
      FiniteField F = FiniteField::create(3, d);
      auto lie = base_change(LieAlgebra::heisenberg(3, k), d);
      for (int m = 0; m <= 2; ++m) {
        const std::uint64_t local = count_lastjump_lt(lie, strictly(Rational(1) + rpow(3, -m)));
        const std::uint64_t expected = F.size() * a_km_bruteforce(k, m, F);
        c.expect(local == expected, "k=" + std::to_string(k) + " q=" + std::to_string(F.size()) +
                                        " m=" + std::to_string(m) + ": " + std::to_string(local) + " vs " +
                                        std::to_string(expected));
      }
    }
  });

  criterion(5, "maximal isotropic subspaces number prod (p^i + 1)", [](Check& c) {
    for (auto [p, k, expected] : {std::tuple{3, 1, 4u}, {3, 2, 40u}, {5, 1, 6u}, {7, 1, 8u}}) {
      IsotropicCount n = isotropic_count(p, k);
      c.expect(n.brute_force == expected && n.formula == expected,
               "(" + std::to_string(p) + "," + std::to_string(k) + "): " + std::to_string(n.brute_force));
    }
  });

  criterion(6, "A_{k,m} stabilizes at m >= k to the isotropic union (4q - 3 for k = 1)", [](Check& c) {
    for (auto [k, d] : {std::pair{1, 1}, {1, 2}, {1, 3}, {2, 1}}) {
      FiniteField F = FiniteField::create(3, d);
      const std::uint64_t stable = a_km_stable(k, F);
      for (int m = k; m <= k + 2; ++m)
        c.expect(a_km_bruteforce(k, m, F) == stable,
                 "k=" + std::to_string(k) + " q=" + std::to_string(F.size()) + " m=" + std::to_string(m));
      if (k == 1) c.expect(stable == 4 * F.size() - 3, "4q-3 at q=" + std::to_string(F.size()));
    }
  });

  criterion(7, "character sum equals brute force for A_{k,m}", [](Check& c) {
    for (int d : {1, 2, 3})
      for (int k : {1, 2})
        for (int m : {1, 2}) {
          FiniteField F = FiniteField::create(3, d);
          c.expect(a_km_charsum(k, m, F) == a_km_bruteforce(k, m, F),
                   "k=" + std::to_string(k) + " m=" + std::to_string(m) + " q=" + std::to_string(F.size()));
        }
  });

  criterion(8, "| |A_{2,1}(F_q)| - q^3 | <= (p^2 + p) q^2", [](Check& c) {
    for (int d : {1, 2, 3}) {
      FiniteField F = FiniteField::create(3, d);
      const long long q = F.size();
      const long long value = static_cast<long long>(a_km_bruteforce(2, 1, F));
      const long long deviation = std::llabs(value - q * q * q);
      c.expect(deviation <= 12 * q * q, "q=" + std::to_string(q) + ": |" + std::to_string(value) + " - " +
                                            std::to_string(q * q * q) + "| = " + std::to_string(deviation) + " > " +
                                            std::to_string(12 * q * q));
    }
  });

  criterion(9, "lastjump equals the functional oracle", [](Check& c) {
    auto h1 = base_change(LieAlgebra::heisenberg(3, 1), 1);
    auto z9 = base_change(LieAlgebra::abelian(3, {2}), 1);
    std::uint64_t checked = 0, mismatches = 0;
    auto compare = [&](const LocalDatum& D) {
      ++checked;
      if (lastjump(D) != lastjump_oracle(D)) ++mismatches;
    };
    for_each_datum(h1, {1, 2}, compare);
    for_each_datum(z9, {1, 2, 4, 5}, compare);
    std::mt19937_64 rng(20240);
    for (int t = 0; t < 10000; ++t) compare(random_datum(h1, {1, 2, 4, 5}, rng));
    c.expect(checked == 729 + 6561 + 10000, "checked " + std::to_string(checked));
    c.expect(mismatches == 0, std::to_string(mismatches) + " mismatches");
  });

  criterion(10, "last jump is invariant under the gauge action", [](Check& c) {
    auto h1 = base_change(LieAlgebra::heisenberg(3, 1), 1);
    std::uint64_t mismatches = 0;
    for_each_datum(h1, {1, 2}, [&](const LocalDatum& D) {
      const Rational jump = lastjump(D);
      for (std::uint64_t i = 0; i < h1->size(); ++i)
        if (lastjump(act_on_datum(h1->from_index(i), D)) != jump) ++mismatches;
    });
    c.expect(mismatches == 0, std::to_string(mismatches) + " mismatches");
  });

  criterion(11, "counts below l + 1 respect the general, better and exponent-p bounds", [](Check& c) {
    for (const auto& [name, g] : {Algebra{"Z/3", LieAlgebra::abelian(3, {1})}, Algebra{"Z/9", LieAlgebra::abelian(3, {2})},
                                  Algebra{"h_1", LieAlgebra::heisenberg(3, 1)}, Algebra{"(2,2,1)", mixed_algebra()}}) {
      const Subobjects sub = g.subobjects();
      const long double group = static_cast<long double>(upow(3, g.log_size()));
      auto lie = base_change(g, 1);
      for (int l : {1, 2}) {
        const long double n = static_cast<long double>(count_lastjump_lt(lie, strictly(Rational(l + 1))));
        const std::string tag = name + " l=" + std::to_string(l);
        c.expect(n <= std::pow(group, 2 * l) * upow(3, sub.r * l), tag + " general bound");
        if (sub.better_bound_hypothesis) c.expect(n <= upow(3, sub.r * l), tag + " better bound");
        if (g.exponent_p()) {
          const Rational v(l + 1);
          c.expect(n <= upow(3, sub.r * (ceil_of(v) - ceil_of(v / 3))), tag + " exponent-p bound");
        }
      }
    }
  });

  criterion(12, "Euler product equals the direct convolution over places for N <= 3", [](Check& c) {
    for (const auto& [name, g] : {Algebra{"Z/3", LieAlgebra::abelian(3, {1})}, Algebra{"h_1", LieAlgebra::heisenberg(3, 1)}}) {
      RationalSeries s = euler_product(g, 1, Rational(3));
      std::map<Rational, BigInt> from_series;
      for (std::size_t j = 0; j < s.coeffs.size(); ++j)
        if (s.coeffs[j] != 0) from_series[s.exponent(j)] = s.coeffs[j];
      c.expect(from_series == direct_convolution(g, Rational(3)), name);
    }
  });

  criterion(13, "growth constants (A, B, M)", [](Check& c) {
    AsymptoticsReport r31 = heisenberg_constants(3, 1);
    c.expect(r31.A == Rational(3) && r31.B == 5, "(3,1)");
    c.expect(heisenberg_constants(3, 2).B == 2, "(3,2)");
    for (auto [p, k] : {std::pair{3, 3}, {5, 1}, {5, 2}, {7, 1}, {7, 2}})
      c.expect(heisenberg_constants(p, k).B == 1, "(" + std::to_string(p) + "," + std::to_string(k) + ")");
    for (const auto& g : {LieAlgebra::abelian(3, {1}), LieAlgebra::abelian(3, {2}), LieAlgebra::abelian(5, {1, 1}),
                          LieAlgebra::heisenberg(3, 1), LieAlgebra::heisenberg(5, 1), LieAlgebra::heisenberg(3, 2)}) {
      const Subobjects sub = g.subobjects();
      AsymptoticsReport r = torsion_growth_constants(g);
      const Rational M = sub.p_torsion_abelian ? Rational(1) : Rational(1) + rpow(g.p(), -1);
      c.expect(r.M == M && r.A == Rational(sub.r + 1) / M, "growth constants for rank " + std::to_string(g.rank()));
    }
  });

  criterion(14, "CLI output is identical with --jobs 1 and --jobs 8", [](Check& c) {
    for (const std::string& args : std::vector<std::string>{
             "lastjump " + std::string(WILDCOUNT_EXAMPLE_DATUM), "distribution --algebra heisenberg:1 --vmax 3 --q 3",
          "distribution --algebra abelian:2 --vmax 2 --q 9", "heisenberg-table akm --k 2 --m 0..2 --q 3",
          "heisenberg-table akm --k 1 --m 1..2 --q 27 --method charsum", "heisenberg-table isotropic --p 3 --k 2",
          "heisenberg-table local --k 1 --m 0..2 --q 9", "global-series --algebra heisenberg:1 --nmax 2",
          "asymptotics --heisenberg 3,1", "--format json asymptotics --algebra heisenberg:1"}) {
      int one_code = 0, eight_code = 0;
      const std::string one = run_cli("--jobs 1 " + args, &one_code);
      const std::string eight = run_cli("--jobs 8 " + args, &eight_code);
      c.expect(one_code == 0 && eight_code == 0, args + ": exit " + std::to_string(one_code));
      c.expect(one == eight, args + ": outputs differ");
    }
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criterion(s) failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}

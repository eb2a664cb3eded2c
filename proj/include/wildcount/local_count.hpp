#pragma once

#include "wildcount/ramification.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace wildcount {

// Number of data D in g (x) D over kappa with lastjump(D) < v (or <= v for v+).
// Enumerates D_a for a < v; the D_b with v <= b < 2v are forced. Work is split
// over `jobs` threads by the value of the first free coefficient.
std::uint64_t count_lastjump_lt(const std::shared_ptr<const LieBaseChange>& lie, const Threshold& v, int jobs = 1);
std::uint64_t count_lastjump_le(const std::shared_ptr<const LieBaseChange>& lie, const Rational& v, int jobs = 1);
std::uint64_t count_lastjump_eq(const std::shared_ptr<const LieBaseChange>& lie, const Rational& v, int jobs = 1);

struct JumpCount {
  Rational jump;
  std::uint64_t count = 0;

  friend bool operator==(const JumpCount&, const JumpCount&) = default;
};

// Last jumps up to vmax that occur, with their counts, ascending; starts with (0, 1).
std::vector<JumpCount> jump_distribution(const std::shared_ptr<const LieBaseChange>& lie, const Rational& vmax,
                                         int jobs = 1);

// Every value <= vmax that a last jump could take.
std::vector<Rational> distribution_grid(int p, int max_order, int degree, const Rational& vmax);

}  // namespace wildcount

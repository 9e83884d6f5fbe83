#pragma once

#include <cstdint>
#include <vector>

#include "frege/apportionment.hpp"

namespace frege {

struct BiasConfig {
  int parties = 5;
  std::int64_t max_votes = 1000; // votes i.i.d. uniform on 1..max_votes
  std::int64_t seats = 100;
  std::int64_t samples = 1000000;
  std::uint64_t seed = 0;
  std::vector<Method> methods{kAllMethods.begin(), kAllMethods.end()};
  int threads = 0; // 0 = hardware concurrency; never affects the result
};

/// Does the smallest party pay fewer votes per seat than the largest?
/// `Skip` only happens when the largest party got no seats (impossible for
/// these methods once k >= m, and asserted there).
enum class Favored { Favored, NotFavored, Skip };

/// The index-th instance of the experiment: a pure function of (seed, index),
/// independent of evaluation order and thread count.
std::vector<BigInt> sample_votes(std::uint64_t seed, std::int64_t index,
                                 const BiasConfig& config);
ApportionmentProblem sample_instance(std::uint64_t seed, std::int64_t index,
                                     const BiasConfig& config);

/// Smallest/largest party by vote share (ties -> lowest index); favored iff
/// p_s/a_s < p_l/a_l with exact cross-multiplied comparison. A smallest
/// party with zero seats has infinite votes-per-seat, so it is not favored.
Favored smaller_party_favored(const ApportionmentProblem& problem, const Seats& solution);

struct MethodBias {
  Method method{};
  std::int64_t favored = 0;
  std::int64_t not_favored = 0;
  std::int64_t skipped = 0;
  std::int64_t smallest_zero_seats = 0; // counted inside not_favored

  double fraction() const {
    const std::int64_t total = favored + not_favored + skipped;
    return total == 0 ? 0.0 : static_cast<double>(favored) / static_cast<double>(total);
  }
  /// 1.96 * sqrt(f(1-f)/n); zero for degenerate variance.
  double ci_half_width() const;
};

struct BiasReport {
  int parties = 0;
  std::int64_t max_votes = 0;
  std::int64_t seats = 0;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  std::int64_t smallest_ties = 0; // instances where several parties share the minimum
  std::int64_t largest_ties = 0;
  std::vector<MethodBias> methods;
};

/// Runs the experiment; the report is a pure function of the config
/// (including the seed) no matter how many threads do the work.
BiasReport run_bias_experiment(const BiasConfig& config);

} // namespace frege

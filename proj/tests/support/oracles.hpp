#pragma once

// Test-only oracles, independent of the implementation paths they check.

#include <optional>
#include <vector>

#include "frege/apportionment.hpp"
#include "frege/profile.hpp"
#include "frege/random.hpp"
#include "frege/rational.hpp"

namespace frege::test {

// d-admissibility straight from the definition: a is admissible iff
// sum a_i = k and there is an x > 0 with d(a_i - 1) <= p_i/x <= d(a_i) for
// all i. The divisor values enter as exact rationals; Huntington-Hill is
// checked in squared space (d(a)^2 = a(a+1)), which is order-preserving for
// positive x, so no square roots appear anywhere.
inline bool d_admissible(DivisorRule rule, const ApportionmentProblem& problem,
                         const Seats& seats) {
  std::int64_t total = 0;
  for (std::int64_t a : seats) {
    if (a < 0) return false;
    total += a;
  }
  if (total != problem.seats) return false;

  const bool squared = rule == DivisorRule::HuntingtonHill;
  const auto d_of = [&](std::int64_t a) -> Rational {
    switch (rule) {
      case DivisorRule::DHondt: return Rational(BigInt(a + 1));
      case DivisorRule::Adams: return Rational(BigInt(a));
      case DivisorRule::SainteLague: return Rational(BigInt(2 * a + 1), BigInt(2));
      case DivisorRule::HuntingtonHill: return Rational(BigInt(a) * (a + 1)); // d^2
    }
    return Rational(0);
  };
  const auto share_of = [&](int i) -> Rational {
    const Rational& p = problem.shares[static_cast<std::size_t>(i)];
    return squared ? p * p : p;
  };

  std::optional<Rational> lower, upper; // bounds on x (or x^2)
  for (int i = 0; i < problem.party_count(); ++i) {
    const Rational p = share_of(i);
    const std::int64_t a = seats[static_cast<std::size_t>(i)];
    const Rational da = d_of(a);
    if (p.is_zero()) {
      // p/x = 0: upper side always holds; lower side needs d(a-1) <= 0.
      if (a >= 1 && d_of(a - 1) > Rational(0)) return false;
      continue;
    }
    if (da.is_zero()) return false; // p/x <= 0 impossible for p > 0
    const Rational lb = p / da;
    if (!lower || lb > *lower) lower = lb;
    if (a >= 1) {
      const Rational dprev = d_of(a - 1);
      if (!dprev.is_zero()) {
        const Rational ub = p / dprev;
        if (!upper || ub < *upper) upper = ub;
      }
    }
  }
  if (lower && upper) return *lower <= *upper;
  return true; // unconstrained on at least one side
}

// Largest-remainder characterization, not a re-run of the algorithm:
// everyone holds floor or floor+1 of k*p_i, the bonus count matches, and no
// bonus went to a party with a (remainder, index) rank below a snubbed one.
inline bool largest_remainder_shape_ok(const ApportionmentProblem& problem, const Seats& seats) {
  const int m = problem.party_count();
  std::int64_t total = 0;
  std::vector<Rational> remainder(static_cast<std::size_t>(m));
  std::vector<bool> bonus(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const Rational quota = problem.shares[static_cast<std::size_t>(i)] *
                           Rational(BigInt(problem.seats));
    const BigInt fl = floor_int(quota);
    const BigInt got(seats[static_cast<std::size_t>(i)]);
    if (got != fl && got != fl + 1) return false;
    remainder[static_cast<std::size_t>(i)] = quota - Rational(fl);
    bonus[static_cast<std::size_t>(i)] = got == fl + 1;
    total += seats[static_cast<std::size_t>(i)];
  }
  if (total != problem.seats) return false;
  for (int i = 0; i < m; ++i) {
    if (!bonus[static_cast<std::size_t>(i)]) continue;
    for (int j = 0; j < m; ++j) {
      if (bonus[static_cast<std::size_t>(j)]) continue;
      const auto& ri = remainder[static_cast<std::size_t>(i)];
      const auto& rj = remainder[static_cast<std::size_t>(j)];
      if (rj > ri || (rj == ri && j < i)) return false;
    }
  }
  return true;
}

// Deterministic random instances for property tests.
inline std::vector<BigInt> random_votes(SplitMix64& rng, int m, std::int64_t max_votes,
                                        std::int64_t min_votes = 0) {
  std::vector<BigInt> votes(static_cast<std::size_t>(m));
  BigInt total = 0;
  do {
    total = 0;
    for (auto& v : votes) {
      v = BigInt(rng.uniform(static_cast<std::uint64_t>(min_votes),
                             static_cast<std::uint64_t>(max_votes)));
      total += v;
    }
  } while (total == 0);
  return votes;
}

inline Profile random_fixed_profile(SplitMix64& rng, int max_m, std::int64_t max_votes) {
  const int m = static_cast<int>(rng.uniform(2, static_cast<std::uint64_t>(max_m)));
  Round round;
  round.scores = random_votes(rng, m, max_votes);
  return Profile::fixed(std::move(round));
}

inline Profile random_varying_profile(SplitMix64& rng, int max_m, std::int64_t rounds,
                                      std::int64_t max_votes) {
  const int m = static_cast<int>(rng.uniform(2, static_cast<std::uint64_t>(max_m)));
  std::vector<Round> rs;
  rs.reserve(static_cast<std::size_t>(rounds));
  for (std::int64_t t = 0; t < rounds; ++t) {
    Round round;
    round.scores = random_votes(rng, m, max_votes);
    rs.push_back(std::move(round));
  }
  return Profile::varying(std::move(rs));
}

} // namespace frege::test

#include "frege/bias.hpp"

#include <cmath>

#include "frege/errors.hpp"
#include "frege/parallel.hpp"
#include "frege/random.hpp"

namespace frege {

double MethodBias::ci_half_width() const {
  const std::int64_t total = favored + not_favored + skipped;
  if (total <= 0) return 0.0;
  const double f = fraction();
  const double variance = f * (1.0 - f) / static_cast<double>(total);
  return variance <= 0.0 ? 0.0 : 1.96 * std::sqrt(variance);
}

std::vector<BigInt> sample_votes(std::uint64_t seed, std::int64_t index,
                                 const BiasConfig& config) {
  SplitMix64 rng = stream_for(seed, static_cast<std::uint64_t>(index));
  std::vector<BigInt> votes;
  votes.reserve(static_cast<std::size_t>(config.parties));
  for (int i = 0; i < config.parties; ++i)
    votes.emplace_back(rng.uniform(1, static_cast<std::uint64_t>(config.max_votes)));
  return votes;
}

ApportionmentProblem sample_instance(std::uint64_t seed, std::int64_t index,
                                     const BiasConfig& config) {
  return ApportionmentProblem::from_votes(sample_votes(seed, index, config), config.seats);
}

namespace {

struct Extremes {
  int smallest = 0;
  int largest = 0;
  bool smallest_tied = false;
  bool largest_tied = false;
};

Extremes find_extremes(const std::vector<Rational>& shares) {
  Extremes e;
  for (int i = 1; i < static_cast<int>(shares.size()); ++i) {
    if (shares[i] < shares[e.smallest]) {
      e.smallest = i;
      e.smallest_tied = false;
    } else if (shares[i] == shares[e.smallest]) {
      e.smallest_tied = true;
    }
    if (shares[i] > shares[e.largest]) {
      e.largest = i;
      e.largest_tied = false;
    } else if (shares[i] == shares[e.largest]) {
      e.largest_tied = true;
    }
  }
  return e;
}

} // namespace

Favored smaller_party_favored(const ApportionmentProblem& problem, const Seats& solution) {
  if (solution.size() != problem.shares.size())
    throw ValidationError("solution size does not match the problem");
  const Extremes e = find_extremes(problem.shares);
  const std::int64_t seats_small = solution[static_cast<std::size_t>(e.smallest)];
  const std::int64_t seats_large = solution[static_cast<std::size_t>(e.largest)];
  if (seats_large == 0) {
    // Cannot happen for k >= m with any of the seven methods.
    FREGE_INTERNAL_CHECK(problem.seats < problem.party_count());
    return Favored::Skip;
  }
  if (seats_small == 0) return Favored::NotFavored; // infinite votes per seat
  // p_s/a_s < p_l/a_l  <=>  p_s * a_l < p_l * a_s.
  const bool favored = problem.shares[static_cast<std::size_t>(e.smallest)] *
                           Rational(BigInt(seats_large)) <
                       problem.shares[static_cast<std::size_t>(e.largest)] *
                           Rational(BigInt(seats_small));
  return favored ? Favored::Favored : Favored::NotFavored;
}

BiasReport run_bias_experiment(const BiasConfig& config) {
  if (config.parties < 2) throw ValidationError("bias experiment needs at least two parties");
  if (config.samples < 1) throw ValidationError("bias experiment needs at least one sample");
  if (config.max_votes < 1) throw ValidationError("max votes must be >= 1");
  if (config.seats < 1) throw ValidationError("house size must be >= 1");
  if (config.methods.empty()) throw ValidationError("no methods selected");

  struct Tally {
    std::vector<MethodBias> methods;
    std::int64_t smallest_ties = 0;
    std::int64_t largest_ties = 0;
  };

  const int threads = resolve_threads(config.threads);
  std::vector<Tally> tallies(static_cast<std::size_t>(threads));
  for (auto& t : tallies) {
    t.methods.reserve(config.methods.size());
    for (Method m : config.methods) {
      MethodBias mb;
      mb.method = m;
      t.methods.push_back(mb);
    }
  }

  parallel_blocks(config.samples, threads, [&](int slot, std::int64_t begin, std::int64_t end) {
    Tally& tally = tallies[static_cast<std::size_t>(slot)];
    for (std::int64_t index = begin; index < end; ++index) {
      const ApportionmentProblem problem = sample_instance(config.seed, index, config);
      const Extremes e = find_extremes(problem.shares);
      if (e.smallest_tied) tally.smallest_ties += 1;
      if (e.largest_tied) tally.largest_ties += 1;
      for (std::size_t mi = 0; mi < config.methods.size(); ++mi) {
        const Seats solution = apportion(config.methods[mi], problem);
        MethodBias& mb = tally.methods[mi];
        switch (smaller_party_favored(problem, solution)) {
          case Favored::Favored:
            mb.favored += 1;
            break;
          case Favored::NotFavored:
            mb.not_favored += 1;
            if (solution[static_cast<std::size_t>(e.smallest)] == 0)
              mb.smallest_zero_seats += 1;
            break;
          case Favored::Skip:
            mb.skipped += 1;
            break;
        }
      }
    }
  });

  BiasReport report;
  report.parties = config.parties;
  report.max_votes = config.max_votes;
  report.seats = config.seats;
  report.samples = config.samples;
  report.seed = config.seed;
  report.methods.reserve(config.methods.size());
  for (Method m : config.methods) {
    MethodBias mb;
    mb.method = m;
    report.methods.push_back(mb);
  }
  for (const Tally& t : tallies) {
    report.smallest_ties += t.smallest_ties;
    report.largest_ties += t.largest_ties;
    for (std::size_t mi = 0; mi < report.methods.size(); ++mi) {
      report.methods[mi].favored += t.methods[mi].favored;
      report.methods[mi].not_favored += t.methods[mi].not_favored;
      report.methods[mi].skipped += t.methods[mi].skipped;
      report.methods[mi].smallest_zero_seats += t.methods[mi].smallest_zero_seats;
    }
  }
  return report;
}

} // namespace frege

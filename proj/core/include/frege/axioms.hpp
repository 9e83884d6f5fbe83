#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "frege/apportionment.hpp"

namespace frege {

enum class Axiom {
  HouseMonotonicity,
  PopulationMonotonicity,
  LowerQuota,
  UpperQuota,
  QuotaForThreeParties,
};

inline constexpr std::array<Axiom, 5> kAllAxioms = {
    Axiom::HouseMonotonicity, Axiom::PopulationMonotonicity, Axiom::LowerQuota,
    Axiom::UpperQuota,        Axiom::QuotaForThreeParties,
};

std::string_view axiom_name(Axiom axiom);         // "house-monotonicity", ...
std::string_view axiom_display_name(Axiom axiom); // "house monot.", ...

/// Exact per-party quota slacks for one solution.
struct QuotaCheck {
  bool upper_ok = true;
  bool lower_ok = true;
  std::vector<BigInt> upper_slack; // ceil(k*p_i) - a_i, negative = violated
  std::vector<BigInt> lower_slack; // a_i - floor(k*p_i), negative = violated
};
QuotaCheck check_quota(const Seats& solution, const ApportionmentProblem& problem);

/// Replayable evidence for a violated axiom: the instance(s), the solutions,
/// and the violated inequality with exact values.
struct Witness {
  ApportionmentProblem problem;
  Seats solution;
  std::optional<ApportionmentProblem> problem_next; // house: same shares, k+1
  std::optional<Seats> solution_next;
  std::optional<ApportionmentProblem> problem_prime; // population: changed shares
  std::optional<Seats> solution_prime;
  std::optional<std::pair<int, int>> party_pair;
  std::string detail;
};

struct AxiomReport {
  Axiom axiom{};
  Method method{};
  bool violated = false; // verdicts are "no counterexample on the tested
                         // instances", never proofs
  std::int64_t instances_checked = 0;
  std::optional<Witness> witness;
  std::vector<std::pair<int, int>> skipped_pairs; // ratio pairs with a zero denominator
};

/// Verifies that consecutive solutions for k = 1..k_max grow by exactly one
/// seat for exactly one party; reports the first failure.
AxiomReport check_house_monotonicity(Method method, const std::vector<Rational>& shares,
                                     std::int64_t k_max);

/// Scans all ordered party pairs (i, j) with p'_i/p'_j >= p_i/p_j (exact) and
/// flags any with a'_i < a_i and a'_j > a_j. Pairs whose ratio has a zero
/// denominator are skipped and listed.
AxiomReport check_population_paradox(Method method, const std::vector<Rational>& shares,
                                     const std::vector<Rational>& shares_prime,
                                     std::int64_t seats);

/// Re-evaluates a report's witness from its payload; true iff the identical
/// violation reproduces.
bool replay_witness(const AxiomReport& report);

/// A frozen counterexample instance: every "-" cell of the axiom table ships
/// one so table regeneration never depends on random search luck.
struct BundledWitness {
  Method method;
  Axiom axiom;
  std::vector<BigInt> votes;
  std::vector<BigInt> votes_prime; // population pairs only
  std::int64_t seats;
};
const std::vector<BundledWitness>& bundled_witnesses();

/// Evaluates the axiom on the bundled instance; a report with
/// violated=false means the bundle is stale.
AxiomReport evaluate_bundled(const BundledWitness& bundled);

struct CorpusConfig {
  std::int64_t instances = 10000;
  int min_parties = 2;
  int max_parties = 8;
  std::int64_t max_seats = 150;
  std::int64_t max_votes = 1000;
  std::uint64_t seed = 0x5eedf00dULL;
  int threads = 0; // 0 = hardware concurrency
};

struct AxiomTable {
  CorpusConfig config;
  std::vector<AxiomReport> cells; // method-major, axiom-minor
  BigInt frege_max_lower_deficit; // observed across the corpus

  const AxiomReport& cell(Method method, Axiom axiom) const;
};

/// Scans a seeded random corpus (instances + paired instances) plus all
/// bundled witnesses and reports a verdict per method x axiom. Instance
/// evaluation is pure and parallel; merging is order-independent, so the
/// table is a function of the config alone.
AxiomTable regenerate_axiom_table(const CorpusConfig& config);

} // namespace frege

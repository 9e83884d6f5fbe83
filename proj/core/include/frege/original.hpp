#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "frege/profile.hpp"
#include "frege/rational.hpp"

namespace frege {

/// State of the original method at round t: integer aggregate scores
/// sigma_j^t and the win counts rho_j(t-1) of all completed rounds.
struct OriginalState {
  std::int64_t t = 1;
  std::vector<BigInt> sigma;
  std::vector<std::int64_t> wins;
};

struct OriginalStep {
  CandidateId winner; // repr(t), argmax of sigma^t with index tie-break
  BigInt cost;        // floor(a(t)/m), subtracted from the winner in the transition
  BigInt total;       // a(t) = sum_j sigma_j^t
};

/// Winner and cost of the state's current round. Selection happens on
/// sigma^t, which includes past costs but not round t's cost.
OriginalStep evaluate_original(const OriginalState& state);

/// Applies round t's outcome and the next round's scores in place:
/// sigma_j^{t+1} = sigma_j^t + pi_j^{t+1} - [repr(t)=j] * floor(a(t)/m).
OriginalStep advance_original(OriginalState& state, const Round& next_round);

/// Pure variant of advance_original (spec surface).
struct OriginalStepResult {
  OriginalState state;
  CandidateId winner;
  BigInt cost;
};
OriginalStepResult step_original(const OriginalState& state, const Round& next_round);

OriginalState initial_original_state(const Round& first_round);

/// Per-round record of a finished run. `sigma` is the score vector the
/// round-t winner was selected on; `cost` the amount that winner paid.
struct OriginalTraceRow {
  std::vector<BigInt> sigma;
  CandidateId winner = 0;
  BigInt cost;
  BigInt round_total;              // n_t
  std::vector<BigInt> cumulative_scores; // sum_{s<=t} pi_j^s
};

struct OriginalTrace {
  int m = 0;
  std::vector<std::string> labels;
  std::vector<OriginalTraceRow> rows; // rows[t-1]
  std::vector<std::int64_t> wins;     // rho_j(T)

  std::int64_t horizon() const { return static_cast<std::int64_t>(rows.size()); }
};

/// Runs T rounds. Checks Lemma-1 behaviour (a(t) non-decreasing, bounded by
/// n*m) on fixed electorates and non-negativity of every score as always-on
/// internal invariants.
OriginalTrace run_original(const Profile& profile, std::int64_t horizon);

/// Smallest t with a(t) = n*m under a(1)=n, a(t+1) = a(t)+n-floor(a(t)/m).
/// Profile-independent: the total score follows this scalar recursion for
/// every fixed electorate of n voters and m candidates.
std::int64_t cost_stabilization_time(const BigInt& voters, int candidates);

struct CycleInfo {
  std::int64_t t_star = 0;  // first round whose state recurs
  std::int64_t period = 0;  // P: state at t_star equals state at t_star + P
  std::vector<std::int64_t> wins_per_period;
};

/// First recurrence of a sigma-state of a fixed-electorate run. Terminates
/// because 0 <= sigma_j <= n*m bounds the state space; `max_states` caps the
/// search and aborts with a diagnostic if exceeded.
CycleInfo detect_cycle(const Profile& profile, std::size_t max_states = 1u << 22);

/// Offsets c_j with sigma_j^{t0+1} = sum_{s<=t0+1} pi_j^s - c_j.
/// Empty when the trace ends at or before t0.
std::vector<BigInt> extract_closed_form_offsets(const OriginalTrace& trace, std::int64_t t0);

/// Verifies sigma_j^{t+1} = sum_{s<=t+1} pi_j^s - c_j - n*(rho_j(t)-rho_j(t0))
/// at every t >= t0 covered by the trace (vacuously true when the trace is
/// shorter). Requires a constant voter count.
bool closed_form_check(const OriginalTrace& trace, std::int64_t t0,
                       const std::vector<BigInt>& offsets);

} // namespace frege

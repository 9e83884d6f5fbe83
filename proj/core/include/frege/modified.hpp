#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frege/profile.hpp"
#include "frege/rational.hpp"

namespace frege {

/// State of the modified method at round t: rational aggregate scores s_j^t
/// (may be negative), cumulative normalized shares sum_{s<=t} p_j^s, and win
/// counts r_j(t-1). The cumulative vector is carried along so quota audits
/// stay O(m) per round.
struct ModifiedState {
  std::int64_t t = 1;
  std::vector<Rational> scores;
  std::vector<Rational> cumulative;
  std::vector<std::int64_t> wins;
};

ModifiedState initial_modified_state(const std::vector<Rational>& first_shares);

/// repr(t) for the state's current round: argmax of s^t, index tie-break.
CandidateId select_modified_winner(const ModifiedState& state);

/// Applies round t's win and the next round's shares in place:
/// s_j^{t+1} = s_j^t + p_j^{t+1} - [repr(t)=j]. Returns repr(t).
/// Checks Lemma 3 (sum of scores stays exactly 1, s_j - p_j > -1) on every
/// step; `next_shares` must sum to exactly 1.
CandidateId advance_modified(ModifiedState& state, const std::vector<Rational>& next_shares);

/// Pure variant of advance_modified (spec surface).
struct ModifiedStepResult {
  ModifiedState state;
  CandidateId winner;
};
ModifiedStepResult step_modified(const ModifiedState& state,
                                 const std::vector<Rational>& next_shares);

struct ModifiedTraceRow {
  std::vector<Rational> scores;     // s^t, the vector the winner was chosen on
  std::vector<Rational> cumulative; // sum_{s<=t} p_j^s
  CandidateId winner = 0;
};

struct ModifiedTrace {
  int m = 0;
  std::vector<std::string> labels;
  std::vector<ModifiedTraceRow> rows; // rows[t-1]
  std::vector<std::int64_t> wins;     // r_j(T)

  std::int64_t horizon() const { return static_cast<std::int64_t>(rows.size()); }
};

/// Runs T rounds with per-round normalization; varying electorates are fine.
ModifiedTrace run_modified(const Profile& profile, std::int64_t horizon);

/// One candidate's quota standing at a given round.
struct QuotaEvent {
  std::int64_t t = 0;
  CandidateId candidate = 0;
  Rational cumulative_share;
  std::int64_t wins = 0;
  BigInt upper_slack;   // r_j(t) - ceil(sum p): > 0 violates variable upper quota
  BigInt lower_deficit; // floor(sum p) - r_j(t): > 0 violates variable lower quota
};

struct QuotaReport {
  int m = 0;
  BigInt theorem5_cap; // ceil((m-3)/2), clamped at 0
  bool upper_quota_ok = true;
  bool lower_quota_ok = true;
  bool theorem5_ok = true;
  BigInt max_upper_slack;   // over all (t, j)
  BigInt max_lower_deficit; // over all (t, j); reported to support exploring tightness
  std::vector<QuotaEvent> upper_violations;
  std::vector<QuotaEvent> lower_violations;
  std::vector<QuotaEvent> theorem5_breaches;
  std::vector<QuotaEvent> final_standings; // one entry per candidate at t = T
};

/// Audits variable upper/lower quota round by round. Deficits above
/// ceil((m-3)/2) are flagged separately: the modified method is proven never
/// to reach them, so any hit there contradicts its guarantee.
QuotaReport audit_variable_quota(const ModifiedTrace& trace);

/// Same audit over an original-method run (for comparison): shares are
/// reconstructed from the recorded plurality scores.
struct OriginalTrace;
QuotaReport audit_variable_quota(const OriginalTrace& trace);

} // namespace frege

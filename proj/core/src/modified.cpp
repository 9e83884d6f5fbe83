#include "frege/modified.hpp"

#include <functional>
#include <utility>

#include "frege/errors.hpp"
#include "frege/original.hpp"

namespace frege {

namespace {

void require_unit_sum(const std::vector<Rational>& shares) {
  Rational sum;
  for (const auto& p : shares) {
    if (p.sign() < 0) throw ValidationError("negative normalized score");
    sum += p;
  }
  if (!(sum == Rational(1)))
    throw ValidationError("normalized scores must sum to exactly 1, got " +
                          to_fraction_string(sum));
}

CandidateId argmax_index(const std::vector<Rational>& v) {
  CandidateId best = 0;
  for (CandidateId j = 1; j < static_cast<CandidateId>(v.size()); ++j)
    if (v[j] > v[best]) best = j;
  return best;
}

// Lemma 4: -1 < sum_{s<=t} p_j^s - r_j(t) <= (m-1)/2, strict above for m >= 3.
void check_quota_bounds(const std::vector<Rational>& cumulative,
                        const std::vector<std::int64_t>& wins, int m) {
  const Rational upper(BigInt(m - 1), BigInt(2));
  for (std::size_t j = 0; j < cumulative.size(); ++j) {
    const Rational diff = cumulative[j] - Rational(BigInt(wins[j]));
    FREGE_INTERNAL_CHECK(diff > Rational(-1));
    if (m >= 3)
      FREGE_INTERNAL_CHECK(diff < upper);
    else
      FREGE_INTERNAL_CHECK(diff <= upper);
  }
}

} // namespace

ModifiedState initial_modified_state(const std::vector<Rational>& first_shares) {
  if (first_shares.size() < 2) throw ValidationError("need at least two candidates");
  require_unit_sum(first_shares);
  ModifiedState st;
  st.t = 1;
  st.scores = first_shares;
  st.cumulative = first_shares;
  st.wins.assign(first_shares.size(), 0);
  return st;
}

CandidateId select_modified_winner(const ModifiedState& state) {
  return argmax_index(state.scores);
}

CandidateId advance_modified(ModifiedState& state, const std::vector<Rational>& next_shares) {
  const int m = static_cast<int>(state.scores.size());
  if (next_shares.size() != state.scores.size())
    throw ValidationError("round has " + std::to_string(next_shares.size()) +
                          " shares, state has " + std::to_string(state.scores.size()));
  require_unit_sum(next_shares);

  const CandidateId winner = argmax_index(state.scores);
  state.wins[winner] += 1;
  check_quota_bounds(state.cumulative, state.wins, m);

  Rational sum;
  for (std::size_t j = 0; j < state.scores.size(); ++j) {
    state.scores[j] += next_shares[j];
    state.cumulative[j] += next_shares[j];
  }
  state.scores[winner] -= Rational(1);
  for (std::size_t j = 0; j < state.scores.size(); ++j) {
    sum += state.scores[j];
    // Lemma 3, second statement: s_j^{t+1} - p_j^{t+1} > -1.
    FREGE_INTERNAL_CHECK(state.scores[j] - next_shares[j] > Rational(-1));
#ifndef NDEBUG
    // Identity (normalized closed form): s_j^{t+1} = sum_{s<=t+1} p_j^s - r_j(t).
    FREGE_INTERNAL_CHECK(state.scores[j] ==
                         state.cumulative[j] - Rational(BigInt(state.wins[j])));
#endif
  }
  // Lemma 3, first statement: aggregate scores always sum to exactly 1.
  FREGE_INTERNAL_CHECK(sum == Rational(1));

  state.t += 1;
  return winner;
}

ModifiedStepResult step_modified(const ModifiedState& state,
                                 const std::vector<Rational>& next_shares) {
  ModifiedStepResult r{state, 0};
  r.winner = advance_modified(r.state, next_shares);
  return r;
}

ModifiedTrace run_modified(const Profile& profile, std::int64_t horizon) {
  if (horizon < 1) throw ValidationError("horizon must be >= 1");
  if (!profile.repeats() &&
      static_cast<std::size_t>(horizon) > profile.stored_rounds())
    throw ValidationError("varying profile has only " +
                          std::to_string(profile.stored_rounds()) + " rounds, horizon is " +
                          std::to_string(horizon));

  const int m = profile.candidate_count();
  ModifiedTrace trace;
  trace.m = m;
  trace.labels = profile.labels();
  trace.wins.assign(m, 0);
  trace.rows.reserve(static_cast<std::size_t>(horizon));

  ModifiedState state = initial_modified_state(profile.normalized(1));
  for (std::int64_t t = 1; t <= horizon; ++t) {
    ModifiedTraceRow row;
    row.scores = state.scores;
    row.cumulative = state.cumulative;
    if (t < horizon) {
      row.winner = advance_modified(state, profile.normalized(t + 1));
    } else {
      row.winner = select_modified_winner(state);
      std::vector<std::int64_t> wins = state.wins;
      wins[row.winner] += 1;
      check_quota_bounds(state.cumulative, wins, m);
    }
    trace.wins[row.winner] += 1;
    trace.rows.push_back(std::move(row));
  }
  return trace;
}

namespace {

BigInt theorem5_cap_for(int m) { return m >= 3 ? BigInt((m - 2) / 2) : BigInt(0); }

QuotaReport audit_core(int m, std::int64_t horizon,
                       const std::function<const std::vector<Rational>&(std::int64_t)>& cumulative_at,
                       const std::function<CandidateId(std::int64_t)>& winner_at) {
  QuotaReport report;
  report.m = m;
  report.theorem5_cap = theorem5_cap_for(m);
  report.max_upper_slack = 0;
  report.max_lower_deficit = 0;
  bool first = true;

  std::vector<std::int64_t> wins(m, 0);
  for (std::int64_t t = 1; t <= horizon; ++t) {
    wins[winner_at(t)] += 1;
    const std::vector<Rational>& cumulative = cumulative_at(t);
    for (CandidateId j = 0; j < m; ++j) {
      QuotaEvent ev;
      ev.t = t;
      ev.candidate = j;
      ev.cumulative_share = cumulative[j];
      ev.wins = wins[j];
      ev.upper_slack = BigInt(wins[j]) - ceil_int(cumulative[j]);
      ev.lower_deficit = floor_int(cumulative[j]) - BigInt(wins[j]);
      if (first) {
        report.max_upper_slack = ev.upper_slack;
        report.max_lower_deficit = ev.lower_deficit;
        first = false;
      } else {
        if (ev.upper_slack > report.max_upper_slack) report.max_upper_slack = ev.upper_slack;
        if (ev.lower_deficit > report.max_lower_deficit)
          report.max_lower_deficit = ev.lower_deficit;
      }
      if (ev.upper_slack > 0) {
        report.upper_quota_ok = false;
        report.upper_violations.push_back(ev);
      }
      if (ev.lower_deficit > 0) {
        report.lower_quota_ok = false;
        report.lower_violations.push_back(ev);
      }
      if (ev.lower_deficit > report.theorem5_cap) {
        report.theorem5_ok = false;
        report.theorem5_breaches.push_back(ev);
      }
      if (t == horizon) report.final_standings.push_back(ev);
    }
  }
  return report;
}

} // namespace

QuotaReport audit_variable_quota(const ModifiedTrace& trace) {
  return audit_core(
      trace.m, trace.horizon(),
      [&](std::int64_t t) -> const std::vector<Rational>& {
        return trace.rows[static_cast<std::size_t>(t - 1)].cumulative;
      },
      [&](std::int64_t t) { return trace.rows[static_cast<std::size_t>(t - 1)].winner; });
}

QuotaReport audit_variable_quota(const OriginalTrace& trace) {
  // Rebuild cumulative normalized shares from the recorded integer scores.
  std::vector<std::vector<Rational>> cumulative;
  cumulative.reserve(trace.rows.size());
  std::vector<Rational> acc(trace.m);
  std::vector<BigInt> previous(trace.m, BigInt(0));
  for (const auto& row : trace.rows) {
    for (int j = 0; j < trace.m; ++j) {
      const BigInt pi = row.cumulative_scores[j] - previous[j];
      previous[j] = row.cumulative_scores[j];
      acc[j] += Rational(pi, row.round_total);
    }
    cumulative.push_back(acc);
  }
  return audit_core(
      trace.m, trace.horizon(),
      [&](std::int64_t t) -> const std::vector<Rational>& {
        return cumulative[static_cast<std::size_t>(t - 1)];
      },
      [&](std::int64_t t) { return trace.rows[static_cast<std::size_t>(t - 1)].winner; });
}

} // namespace frege

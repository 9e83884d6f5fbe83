#include "frege/original.hpp"

#include <cstring>
#include <string>
#include <unordered_map>
#include <utility>

#include "frege/errors.hpp"

namespace frege {

namespace {

CandidateId argmax_index(const std::vector<BigInt>& v) {
  CandidateId best = 0;
  for (CandidateId j = 1; j < static_cast<CandidateId>(v.size()); ++j)
    if (v[j] > v[best]) best = j;
  return best;
}

} // namespace

OriginalState initial_original_state(const Round& first_round) {
  OriginalState st;
  st.t = 1;
  st.sigma = first_round.scores;
  st.wins.assign(first_round.scores.size(), 0);
  if (st.sigma.size() < 2) throw ValidationError("need at least two candidates");
  return st;
}

OriginalStep evaluate_original(const OriginalState& state) {
  const int m = static_cast<int>(state.sigma.size());
  OriginalStep step;
  step.winner = argmax_index(state.sigma);
  step.total = 0;
  for (const auto& s : state.sigma) step.total += s;
  step.cost = step.total / m; // scores are non-negative, so this is the floor
  return step;
}

OriginalStep advance_original(OriginalState& state, const Round& next_round) {
  if (next_round.scores.size() != state.sigma.size())
    throw ValidationError("round has " + std::to_string(next_round.scores.size()) +
                          " scores, state has " + std::to_string(state.sigma.size()));
  const OriginalStep step = evaluate_original(state);
  for (std::size_t j = 0; j < state.sigma.size(); ++j) {
    if (next_round.scores[j] < 0) throw ValidationError("negative plurality score");
    state.sigma[j] += next_round.scores[j];
  }
  state.sigma[step.winner] -= step.cost;
  // The cost never exceeds the maximal score, so scores stay non-negative.
  FREGE_INTERNAL_CHECK(state.sigma[step.winner] >= 0);
  state.wins[step.winner] += 1;
  state.t += 1;
  return step;
}

OriginalStepResult step_original(const OriginalState& state, const Round& next_round) {
  OriginalStepResult r{state, 0, 0};
  const OriginalStep step = advance_original(r.state, next_round);
  r.winner = step.winner;
  r.cost = step.cost;
  return r;
}

OriginalTrace run_original(const Profile& profile, std::int64_t horizon) {
  if (horizon < 1) throw ValidationError("horizon must be >= 1");
  if (!profile.repeats() &&
      static_cast<std::size_t>(horizon) > profile.stored_rounds())
    throw ValidationError("varying profile has only " +
                          std::to_string(profile.stored_rounds()) + " rounds, horizon is " +
                          std::to_string(horizon));

  const int m = profile.candidate_count();
  const bool fixed = profile.is_fixed();
  const BigInt score_bound = fixed ? profile.round(1).total() * m : BigInt(0);

  OriginalTrace trace;
  trace.m = m;
  trace.labels = profile.labels();
  trace.wins.assign(m, 0);
  trace.rows.reserve(static_cast<std::size_t>(horizon));

  OriginalState state = initial_original_state(profile.round(1));
  std::vector<BigInt> cumulative = profile.round(1).scores;
  BigInt previous_total = -1;

  for (std::int64_t t = 1; t <= horizon; ++t) {
    const OriginalStep step = evaluate_original(state);
    if (fixed) {
      // Lemma 1: a(t) is non-decreasing and never exceeds n*m.
      FREGE_INTERNAL_CHECK(step.total >= previous_total);
      FREGE_INTERNAL_CHECK(step.total <= score_bound);
      previous_total = step.total;
    }
    OriginalTraceRow row;
    row.sigma = state.sigma;
    row.winner = step.winner;
    row.cost = step.cost;
    row.round_total = profile.round(t).total();
    row.cumulative_scores = cumulative;
    trace.rows.push_back(std::move(row));
    trace.wins[step.winner] += 1;

    if (t < horizon) {
      const Round& next = profile.round(t + 1);
      advance_original(state, next);
      for (int j = 0; j < m; ++j) cumulative[j] += next.scores[j];
    }
  }
  return trace;
}

std::int64_t cost_stabilization_time(const BigInt& voters, int candidates) {
  if (voters < 1) throw ValidationError("need at least one voter");
  if (candidates < 2) throw ValidationError("need at least two candidates");
  const BigInt target = voters * candidates;
  BigInt a = voters;
  std::int64_t t = 1;
  while (a != target) {
    // Strictly increasing below n*m, so this terminates; never overshoots.
    a += voters - a / candidates;
    t += 1;
    FREGE_INTERNAL_CHECK(a <= target);
  }
  return t;
}

namespace {

// Dense byte key for a sigma vector; scores of fixed-electorate runs fit in
// 64 bits unless n*m is astronomical, in which case fall back to decimals.
std::string state_key(const std::vector<BigInt>& sigma, bool fits64) {
  std::string key;
  if (fits64) {
    key.resize(sigma.size() * sizeof(std::uint64_t));
    char* out = key.data();
    for (const auto& s : sigma) {
      const std::uint64_t v = s.convert_to<std::uint64_t>();
      std::memcpy(out, &v, sizeof v);
      out += sizeof v;
    }
  } else {
    for (const auto& s : sigma) {
      key += s.str();
      key += ',';
    }
  }
  return key;
}

} // namespace

CycleInfo detect_cycle(const Profile& profile, std::size_t max_states) {
  if (!profile.is_fixed())
    throw ValidationError("cycle detection requires a fixed electorate");
  const Round& round = profile.round(1);
  const int m = profile.candidate_count();
  const BigInt n = round.total();
  const bool fits64 = n * m <= BigInt(UINT64_MAX);

  OriginalState state = initial_original_state(round);
  std::unordered_map<std::string, std::int64_t> first_seen;
  std::vector<CandidateId> winners; // winners[t-1]

  for (;;) {
    auto [it, inserted] = first_seen.emplace(state_key(state.sigma, fits64), state.t);
    if (!inserted) {
      CycleInfo info;
      info.t_star = it->second;
      info.period = state.t - it->second;
      info.wins_per_period.assign(m, 0);
      for (std::int64_t t = info.t_star; t < state.t; ++t)
        info.wins_per_period[winners[static_cast<std::size_t>(t - 1)]] += 1;
      return info;
    }
    if (first_seen.size() > max_states)
      throw ValidationError("cycle detection exceeded the state cap of " +
                            std::to_string(max_states) + " states");
    winners.push_back(advance_original(state, round).winner);
  }
}

std::vector<BigInt> extract_closed_form_offsets(const OriginalTrace& trace, std::int64_t t0) {
  if (t0 < 1) throw ValidationError("t0 must be >= 1");
  if (trace.horizon() <= t0) return {};
  const OriginalTraceRow& row = trace.rows[static_cast<std::size_t>(t0)]; // round t0+1
  std::vector<BigInt> offsets(trace.m);
  for (int j = 0; j < trace.m; ++j)
    offsets[j] = row.cumulative_scores[j] - row.sigma[j];
  return offsets;
}

bool closed_form_check(const OriginalTrace& trace, std::int64_t t0,
                       const std::vector<BigInt>& offsets) {
  if (trace.horizon() <= t0) return true; // nothing past t0: vacuously true
  if (static_cast<int>(offsets.size()) != trace.m)
    throw ValidationError("offset vector length does not match the trace");

  const BigInt n = trace.rows.front().round_total;
  for (const auto& row : trace.rows)
    if (row.round_total != n)
      throw ValidationError("closed-form check requires a constant voter count");

  std::vector<std::int64_t> wins(trace.m, 0); // rho_j(t) while scanning
  std::vector<std::int64_t> wins_at_t0(trace.m, 0);
  for (std::int64_t t = 1; t < trace.horizon(); ++t) {
    wins[trace.rows[static_cast<std::size_t>(t - 1)].winner] += 1;
    if (t == t0) wins_at_t0 = wins;
    if (t < t0) continue;
    const OriginalTraceRow& next = trace.rows[static_cast<std::size_t>(t)]; // sigma^{t+1}
    for (int j = 0; j < trace.m; ++j) {
      const BigInt expected =
          next.cumulative_scores[j] - offsets[j] - n * (wins[j] - wins_at_t0[j]);
      if (next.sigma[j] != expected) return false;
    }
  }
  return true;
}

} // namespace frege

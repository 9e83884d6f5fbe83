#include "frege/apportionment.hpp"

#include <algorithm>
#include <numeric>

#include "frege/errors.hpp"

namespace frege {

ApportionmentProblem ApportionmentProblem::from_votes(const std::vector<BigInt>& votes,
                                                      std::int64_t seats) {
  if (votes.empty()) throw ValidationError("no parties");
  BigInt total = 0;
  for (const auto& v : votes) {
    if (v < 0) throw ValidationError("negative vote count");
    total += v;
  }
  if (total < 1) throw ValidationError("no votes cast");
  std::vector<Rational> shares;
  shares.reserve(votes.size());
  for (const auto& v : votes) shares.emplace_back(v, total);
  return from_shares(std::move(shares), seats);
}

ApportionmentProblem ApportionmentProblem::from_shares(std::vector<Rational> shares,
                                                       std::int64_t seats) {
  if (shares.empty()) throw ValidationError("no parties");
  if (seats < 1) throw ValidationError("house size must be >= 1");
  Rational sum;
  for (const auto& p : shares) {
    if (p.sign() < 0) throw ValidationError("negative vote share");
    sum += p;
  }
  if (!(sum == Rational(1)))
    throw ValidationError("vote shares must sum to exactly 1, got " + to_fraction_string(sum));
  ApportionmentProblem problem;
  problem.shares = std::move(shares);
  problem.seats = seats;
  return problem;
}

std::string_view method_name(Method method) {
  switch (method) {
    case Method::LargestRemainder: return "largest-remainder";
    case Method::DHondt: return "dhondt";
    case Method::Adams: return "adams";
    case Method::SainteLague: return "sainte-lague";
    case Method::HuntingtonHill: return "huntington-hill";
    case Method::QuotaMethod: return "quota";
    case Method::FregeApportionment: return "frege";
  }
  return "?";
}

std::string_view method_display_name(Method method) {
  switch (method) {
    case Method::LargestRemainder: return "Largest Remainder";
    case Method::DHondt: return "D'Hondt (Jefferson)";
    case Method::Adams: return "Adams";
    case Method::SainteLague: return "Sainte-Lague (Webster)";
    case Method::HuntingtonHill: return "Huntington-Hill";
    case Method::QuotaMethod: return "Quota method";
    case Method::FregeApportionment: return "Frege's apportionment method";
  }
  return "?";
}

std::optional<Method> method_from_name(std::string_view name) {
  for (Method m : kAllMethods)
    if (name == method_name(m)) return m;
  return std::nullopt;
}

namespace detail {

ScaledVotes to_common_denominator(const std::vector<Rational>& shares) {
  BigInt common = 1;
  for (const auto& p : shares) common = boost::multiprecision::lcm(common, p.den());
  ScaledVotes sv;
  sv.total = common;
  sv.votes.reserve(shares.size());
  for (const auto& p : shares) sv.votes.push_back(p.num() * (common / p.den()));
  return sv;
}

} // namespace detail

namespace {

using detail::ScaledVotes;

// True if party (vi, ai) strictly precedes (vj, aj) under d-priority p/d(a).
bool higher_priority(DivisorRule rule, const BigInt& vi, std::int64_t ai, const BigInt& vj,
                     std::int64_t aj) {
  switch (rule) {
    case DivisorRule::DHondt:
      return vi * (aj + 1) > vj * (ai + 1);
    case DivisorRule::SainteLague:
      return vi * (2 * aj + 1) > vj * (2 * ai + 1);
    case DivisorRule::Adams: {
      const bool inf_i = ai == 0 && vi > 0;
      const bool inf_j = aj == 0 && vj > 0;
      if (inf_i != inf_j) return inf_i;
      if (inf_i) return vi > vj; // limit ordering of p/d as d -> 0+
      // Zero-share parties have zero priority; cross-multiplying against a
      // 0/0 entry would misorder them.
      if (vi == 0) return false;
      if (vj == 0) return true;
      return vi * aj > vj * ai;
    }
    case DivisorRule::HuntingtonHill: {
      const bool inf_i = ai == 0 && vi > 0;
      const bool inf_j = aj == 0 && vj > 0;
      if (inf_i != inf_j) return inf_i;
      if (inf_i) return vi > vj;
      if (vi == 0) return false;
      if (vj == 0) return true;
      return vi * vi * (BigInt(aj) * (aj + 1)) > vj * vj * (BigInt(ai) * (ai + 1));
    }
  }
  return false;
}

Seats divisor_kernel(DivisorRule rule, const ScaledVotes& sv, std::int64_t seats) {
  const int m = static_cast<int>(sv.votes.size());
  Seats a(m, 0);
  for (std::int64_t awarded = 0; awarded < seats; ++awarded) {
    int best = 0;
    for (int i = 1; i < m; ++i)
      if (higher_priority(rule, sv.votes[i], a[i], sv.votes[best], a[best])) best = i;
    a[best] += 1;
  }
  return a;
}

Seats largest_remainder_kernel(const ScaledVotes& sv, std::int64_t seats) {
  const int m = static_cast<int>(sv.votes.size());
  Seats a(m, 0);
  std::vector<BigInt> remainder(m);
  std::int64_t assigned = 0;
  for (int i = 0; i < m; ++i) {
    const BigInt scaled = sv.votes[i] * seats; // k*p_i = scaled/total
    const BigInt fl = scaled / sv.total;
    a[i] = fl.convert_to<std::int64_t>();
    remainder[i] = scaled - fl * sv.total;
    assigned += a[i];
  }
  std::int64_t bonus = seats - assigned;
  FREGE_INTERNAL_CHECK(bonus >= 0 && bonus < m);
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return remainder[i] > remainder[j]; });
  for (std::int64_t b = 0; b < bonus; ++b) a[order[static_cast<std::size_t>(b)]] += 1;
  return a;
}

Seats quota_kernel(const ScaledVotes& sv, std::int64_t seats) {
  const int m = static_cast<int>(sv.votes.size());
  Seats a(m, 0);
  for (std::int64_t l = 1; l <= seats; ++l) {
    int best = -1;
    for (int i = 0; i < m; ++i) {
      // Upper-quota eligibility: a_i < p_i * l, exactly.
      if (BigInt(a[i]) * sv.total >= sv.votes[i] * l) continue;
      if (best < 0 || sv.votes[i] * (a[best] + 1) > sv.votes[best] * (a[i] + 1)) best = i;
    }
    // Sum of quotas p_i*l is l > sum a_i = l-1, so someone is always eligible.
    FREGE_INTERNAL_CHECK(best >= 0);
    a[best] += 1;
  }
  return a;
}

Seats frege_kernel(const ScaledVotes& sv, std::int64_t seats) {
  const int m = static_cast<int>(sv.votes.size());
  // Modified-method scores scaled by the common denominator stay integral:
  // s_j^1 = v_j, transitions add v_j to everyone and subtract the total from
  // the round winner.
  std::vector<BigInt> scaled = sv.votes;
  Seats wins(m, 0);
  for (std::int64_t round = 1; round <= seats; ++round) {
    int best = 0;
    BigInt check = scaled[0];
    for (int i = 1; i < m; ++i) {
      if (scaled[i] > scaled[best]) best = i;
      check += scaled[i];
    }
    FREGE_INTERNAL_CHECK(check == sv.total); // Lemma 3, scaled
    wins[best] += 1;
    for (int i = 0; i < m; ++i) scaled[i] += sv.votes[i];
    scaled[best] -= sv.total;
  }
  return wins;
}

ScaledVotes prepare(const ApportionmentProblem& problem) {
  if (problem.party_count() < 1) throw ValidationError("no parties");
  if (problem.seats < 1) throw ValidationError("house size must be >= 1");
  return detail::to_common_denominator(problem.shares);
}

} // namespace

Seats largest_remainder(const ApportionmentProblem& problem) {
  return largest_remainder_kernel(prepare(problem), problem.seats);
}

Seats divisor_method(DivisorRule rule, const ApportionmentProblem& problem) {
  return divisor_kernel(rule, prepare(problem), problem.seats);
}

Seats quota_method(const ApportionmentProblem& problem) {
  return quota_kernel(prepare(problem), problem.seats);
}

Seats frege_apportionment(const ApportionmentProblem& problem) {
  return frege_kernel(prepare(problem), problem.seats);
}

Seats apportion(Method method, const ApportionmentProblem& problem) {
  switch (method) {
    case Method::LargestRemainder: return largest_remainder(problem);
    case Method::DHondt: return divisor_method(DivisorRule::DHondt, problem);
    case Method::Adams: return divisor_method(DivisorRule::Adams, problem);
    case Method::SainteLague: return divisor_method(DivisorRule::SainteLague, problem);
    case Method::HuntingtonHill: return divisor_method(DivisorRule::HuntingtonHill, problem);
    case Method::QuotaMethod: return quota_method(problem);
    case Method::FregeApportionment: return frege_apportionment(problem);
  }
  throw ValidationError("unknown apportionment method");
}

std::vector<std::pair<Method, Seats>> compare_all(const ApportionmentProblem& problem) {
  std::vector<std::pair<Method, Seats>> out;
  out.reserve(kAllMethods.size());
  for (Method m : kAllMethods) out.emplace_back(m, apportion(m, problem));
  return out;
}

} // namespace frege

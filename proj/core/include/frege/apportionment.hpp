#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "frege/rational.hpp"

namespace frege {

/// Vote distribution summing to exactly 1 plus a house size.
struct ApportionmentProblem {
  std::vector<Rational> shares;
  std::int64_t seats = 0;

  static ApportionmentProblem from_votes(const std::vector<BigInt>& votes, std::int64_t seats);
  static ApportionmentProblem from_shares(std::vector<Rational> shares, std::int64_t seats);

  int party_count() const { return static_cast<int>(shares.size()); }
};

/// Non-negative seat counts summing to the house size.
using Seats = std::vector<std::int64_t>;

enum class DivisorRule { DHondt, Adams, SainteLague, HuntingtonHill };

enum class Method {
  LargestRemainder,
  DHondt,
  Adams,
  SainteLague,
  HuntingtonHill,
  QuotaMethod,
  FregeApportionment,
};

inline constexpr std::array<Method, 7> kAllMethods = {
    Method::LargestRemainder, Method::DHondt,      Method::Adams,
    Method::SainteLague,      Method::HuntingtonHill, Method::QuotaMethod,
    Method::FregeApportionment,
};

std::string_view method_name(Method method);       // "largest-remainder", "dhondt", ...
std::string_view method_display_name(Method method); // "Largest Remainder", ...
std::optional<Method> method_from_name(std::string_view name);

/// Floor quotas, then one bonus seat each to the largest remainders
/// k*p_i - floor(k*p_i); ties by index.
Seats largest_remainder(const ApportionmentProblem& problem);

/// Highest-averages iteration: k times, award a seat to the party with
/// maximal p_i / d(a_i), where d(a_i) = 0 with p_i > 0 counts as infinite
/// priority (infinite priorities ordered by share). All comparisons exact;
/// Huntington-Hill compares p_i^2 / (a_i (a_i+1)), no square roots.
Seats divisor_method(DivisorRule rule, const ApportionmentProblem& problem);

/// In round l, among parties that would not violate upper quota
/// (a_i < p_i * l), award a seat to the maximal p_i / (a_i + 1).
Seats quota_method(const ApportionmentProblem& problem);

/// The modified-method win counts after k rounds on the fixed profile p.
Seats frege_apportionment(const ApportionmentProblem& problem);

Seats apportion(Method method, const ApportionmentProblem& problem);

/// All seven methods in the fixed table order.
std::vector<std::pair<Method, Seats>> compare_all(const ApportionmentProblem& problem);

namespace detail {
/// Shares rewritten over one common denominator: shares[i] = votes[i]/total.
/// The integer kernels run on this exact form.
struct ScaledVotes {
  std::vector<BigInt> votes;
  BigInt total;
};
ScaledVotes to_common_denominator(const std::vector<Rational>& shares);
} // namespace detail

} // namespace frege

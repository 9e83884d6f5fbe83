#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frege/rational.hpp"

namespace frege {

/// 0-based candidate index. Index order IS the tie-breaking order: the paper
/// rule "broken on the basis of age" maps to input order, ages not modeled.
using CandidateId = int;

std::string default_label(CandidateId j); // "a".."z", then "c26", "c27", ...

/// One election round: plurality scores pi_j^t. n_t is the derived total.
struct Round {
  std::vector<BigInt> scores;

  BigInt total() const {
    BigInt n = 0;
    for (const auto& s : scores) n += s;
    return n;
  }
};

/// Per-round plurality scores for m candidates. A repeating profile stores
/// its block once and serves rounds lazily, so long-horizon runs stay O(1)
/// in profile memory; `repeat` with a single round is the paper's fixed
/// electorate. A varying profile is a finite sequence and runs past its end
/// are an error.
class Profile {
public:
  static Profile fixed(Round round, std::vector<std::string> labels = {});
  static Profile repeating(std::vector<Round> block, std::vector<std::string> labels = {});
  static Profile varying(std::vector<Round> rounds, std::vector<std::string> labels = {});

  int candidate_count() const { return m_; }
  bool repeats() const { return repeats_; }
  /// Fixed electorate: one round repeated indefinitely (n_t and pi_j^t constant).
  bool is_fixed() const { return repeats_ && rounds_.size() == 1; }
  std::size_t stored_rounds() const { return rounds_.size(); }

  /// True if round t (1-based) exists; always true for repeating profiles.
  bool has_round(std::int64_t t) const {
    return t >= 1 && (repeats_ || static_cast<std::size_t>(t) <= rounds_.size());
  }
  const Round& round(std::int64_t t) const;

  /// Normalized scores p_j^t of round t, summing to exactly 1.
  std::vector<Rational> normalized(std::int64_t t) const;

  const std::vector<std::string>& labels() const { return labels_; }

private:
  Profile(std::vector<Round> rounds, bool repeats, std::vector<std::string> labels);

  int m_ = 0;
  bool repeats_ = false;
  std::vector<Round> rounds_;
  std::vector<std::string> labels_;
};

/// p_j = pi_j / n_t as exact rationals; the sum is exactly 1.
std::vector<Rational> normalize(const Round& round);

} // namespace frege

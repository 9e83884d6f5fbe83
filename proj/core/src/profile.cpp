#include "frege/profile.hpp"

#include "frege/errors.hpp"

namespace frege {

std::string default_label(CandidateId j) {
  if (j >= 0 && j < 26) return std::string(1, static_cast<char>('a' + j));
  return "c" + std::to_string(j);
}

Profile::Profile(std::vector<Round> rounds, bool repeats, std::vector<std::string> labels)
    : repeats_(repeats), rounds_(std::move(rounds)), labels_(std::move(labels)) {
  if (rounds_.empty()) throw ValidationError("profile needs at least one round");
  m_ = static_cast<int>(rounds_.front().scores.size());
  if (m_ < 2) throw ValidationError("profile needs at least two candidates");
  for (std::size_t i = 0; i < rounds_.size(); ++i) {
    const Round& r = rounds_[i];
    if (static_cast<int>(r.scores.size()) != m_)
      throw ValidationError("round " + std::to_string(i + 1) + " has " +
                            std::to_string(r.scores.size()) + " scores, expected " +
                            std::to_string(m_));
    BigInt n = 0;
    for (std::size_t j = 0; j < r.scores.size(); ++j) {
      if (r.scores[j] < 0)
        throw ValidationError("negative score, round " + std::to_string(i + 1) +
                              ", candidate " + std::to_string(j + 1));
      n += r.scores[j];
    }
    if (n < 1) throw ValidationError("round " + std::to_string(i + 1) + " has no voters");
  }
  if (labels_.empty()) {
    labels_.reserve(m_);
    for (int j = 0; j < m_; ++j) labels_.push_back(default_label(j));
  } else if (static_cast<int>(labels_.size()) != m_) {
    throw ValidationError("label count does not match candidate count");
  }
}

Profile Profile::fixed(Round round, std::vector<std::string> labels) {
  return Profile({std::move(round)}, true, std::move(labels));
}

Profile Profile::repeating(std::vector<Round> block, std::vector<std::string> labels) {
  return Profile(std::move(block), true, std::move(labels));
}

Profile Profile::varying(std::vector<Round> rounds, std::vector<std::string> labels) {
  return Profile(std::move(rounds), false, std::move(labels));
}

const Round& Profile::round(std::int64_t t) const {
  if (t < 1) throw ValidationError("round index must be >= 1");
  if (repeats_) return rounds_[static_cast<std::size_t>((t - 1) % rounds_.size())];
  if (static_cast<std::size_t>(t) > rounds_.size())
    throw ValidationError("varying profile has only " + std::to_string(rounds_.size()) +
                          " rounds, requested round " + std::to_string(t));
  return rounds_[static_cast<std::size_t>(t - 1)];
}

std::vector<Rational> Profile::normalized(std::int64_t t) const { return normalize(round(t)); }

std::vector<Rational> normalize(const Round& round) {
  if (round.scores.empty()) throw ValidationError("cannot normalize an empty round");
  const BigInt n = round.total();
  if (n < 1) throw ValidationError("cannot normalize a round with no voters");
  std::vector<Rational> p;
  p.reserve(round.scores.size());
  for (const auto& s : round.scores) {
    if (s < 0) throw ValidationError("negative plurality score");
    p.emplace_back(s, n);
  }
  return p;
}

} // namespace frege

#include "frege/io.hpp"

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "frege/errors.hpp"

namespace frege {

using nlohmann::json;

std::optional<OutputFormat> output_format_from_name(std::string_view name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  return std::nullopt;
}

namespace {

BigInt json_to_bigint(const json& value, const std::string& where) {
  if (value.is_number_unsigned()) return BigInt(value.get<std::uint64_t>());
  if (value.is_number_integer()) return BigInt(value.get<std::int64_t>());
  if (value.is_string()) {
    try {
      return BigInt(value.get<std::string>());
    } catch (const std::exception&) {
      throw ValidationError("not an integer at " + where + ": '" + value.get<std::string>() +
                            "'");
    }
  }
  throw ValidationError("expected an integer at " + where);
}

Profile profile_from_json(const json& doc) {
  if (!doc.is_object()) throw ValidationError("profile JSON must be an object");
  if (!doc.contains("rounds") || !doc["rounds"].is_array() || doc["rounds"].empty())
    throw ValidationError("profile needs a non-empty 'rounds' array");

  std::vector<std::string> labels;
  if (doc.contains("candidates")) {
    if (!doc["candidates"].is_array())
      throw ValidationError("'candidates' must be an array of names");
    for (const auto& c : doc["candidates"]) labels.push_back(c.get<std::string>());
  }
  const bool repeat = doc.value("repeat", false);

  std::vector<Round> rounds;
  rounds.reserve(doc["rounds"].size());
  std::size_t round_no = 0;
  for (const auto& row : doc["rounds"]) {
    ++round_no;
    if (!row.is_array())
      throw ValidationError("round " + std::to_string(round_no) + " is not an array");
    Round r;
    r.scores.reserve(row.size());
    std::size_t col = 0;
    for (const auto& cell : row) {
      ++col;
      const std::string where =
          "round " + std::to_string(round_no) + ", candidate " + std::to_string(col);
      r.scores.push_back(json_to_bigint(cell, where));
      if (r.scores.back() < 0)
        throw ValidationError("negative score, round " + std::to_string(round_no) +
                              ", candidate " + std::to_string(col));
    }
    rounds.push_back(std::move(r));
  }
  return repeat ? Profile::repeating(std::move(rounds), std::move(labels))
                : Profile::varying(std::move(rounds), std::move(labels));
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

Profile profile_from_csv(std::string_view bytes) {
  std::vector<Round> rounds;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= bytes.size()) {
    const std::size_t nl = bytes.find('\n', pos);
    std::string_view line =
        bytes.substr(pos, nl == std::string_view::npos ? bytes.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? bytes.size() + 1 : nl + 1;
    if (trim(line).empty()) continue;
    ++line_no;
    Round r;
    std::size_t cell_start = 0;
    std::size_t col = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
      if (i != line.size() && line[i] != ',') continue;
      const std::string cell = trim(line.substr(cell_start, i - cell_start));
      cell_start = i + 1;
      ++col;
      if (cell.empty())
        throw ValidationError("empty cell, round " + std::to_string(line_no) + ", candidate " +
                              std::to_string(col));
      try {
        r.scores.emplace_back(cell);
      } catch (const std::exception&) {
        throw ValidationError("not an integer, round " + std::to_string(line_no) +
                              ", candidate " + std::to_string(col) + ": '" + cell + "'");
      }
      if (r.scores.back() < 0)
        throw ValidationError("negative score, round " + std::to_string(line_no) +
                              ", candidate " + std::to_string(col));
    }
    rounds.push_back(std::move(r));
  }
  if (rounds.empty()) throw ValidationError("profile needs at least one round");
  return Profile::varying(std::move(rounds));
}

} // namespace

Profile parse_profile(std::string_view bytes) {
  for (char c : bytes) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') {
      json doc;
      try {
        doc = json::parse(bytes);
      } catch (const json::parse_error& e) {
        throw ValidationError(std::string("invalid profile JSON: ") + e.what());
      }
      return profile_from_json(doc);
    }
    return profile_from_csv(bytes);
  }
  throw ValidationError("empty profile input");
}

std::string render_profile_json(const Profile& profile) {
  json doc;
  doc["candidates"] = profile.labels();
  json rounds = json::array();
  for (std::size_t i = 1; i <= profile.stored_rounds(); ++i) {
    json row = json::array();
    for (const auto& s : profile.round(static_cast<std::int64_t>(i)).scores) {
      if (s <= BigInt(INT64_MAX))
        row.push_back(s.convert_to<std::int64_t>());
      else
        row.push_back(s.str());
    }
    rounds.push_back(std::move(row));
  }
  doc["rounds"] = std::move(rounds);
  doc["repeat"] = profile.repeats();
  return doc.dump();
}

namespace {

void pad_to(std::string& out, const std::string& text, std::size_t width, bool right) {
  if (text.size() >= width) {
    out += text;
    return;
  }
  if (right) out.append(width - text.size(), ' ');
  out += text;
  if (!right) out.append(width - text.size(), ' ');
}

std::string fixed_decimal(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

// Minimal aligned-table builder: right-aligned numeric columns.
struct TextTable {
  std::vector<std::vector<std::string>> rows;
  void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }
  std::string str(int gap = 2) const {
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
      if (widths.size() < row.size()) widths.resize(row.size(), 0);
      for (std::size_t c = 0; c < row.size(); ++c)
        widths[c] = std::max(widths[c], row[c].size());
    }
    std::string out;
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) out.append(static_cast<std::size_t>(gap), ' ');
        pad_to(out, row[c], widths[c], c != 0 || true);
      }
      while (!out.empty() && out.back() == ' ') out.pop_back();
      out += '\n';
    }
    return out;
  }
};

} // namespace

std::string render_trace(const OriginalTrace& trace, OutputFormat format) {
  switch (format) {
    case OutputFormat::Text: {
      TextTable table;
      std::vector<std::string> header{"t"};
      for (const auto& l : trace.labels) header.push_back(l);
      header.push_back("winner");
      header.push_back("cost");
      table.add(std::move(header));
      for (std::size_t i = 0; i < trace.rows.size(); ++i) {
        const auto& row = trace.rows[i];
        std::vector<std::string> cells{std::to_string(i + 1)};
        for (int j = 0; j < trace.m; ++j) {
          std::string cell = row.sigma[j].str();
          if (j == row.winner) cell.insert(cell.begin(), '*');
          cells.push_back(std::move(cell));
        }
        cells.push_back(trace.labels[static_cast<std::size_t>(row.winner)]);
        cells.push_back(row.cost.str());
        table.add(std::move(cells));
      }
      return table.str();
    }
    case OutputFormat::Csv: {
      std::string out = "t";
      for (const auto& l : trace.labels) out += ",sigma_" + l;
      out += ",winner,cost\n";
      for (std::size_t i = 0; i < trace.rows.size(); ++i) {
        const auto& row = trace.rows[i];
        out += std::to_string(i + 1);
        for (int j = 0; j < trace.m; ++j) out += "," + row.sigma[j].str();
        out += "," + trace.labels[static_cast<std::size_t>(row.winner)];
        out += "," + row.cost.str();
        out += '\n';
      }
      return out;
    }
    case OutputFormat::Json: {
      json doc;
      doc["method"] = "original";
      doc["candidates"] = trace.labels;
      json rows = json::array();
      for (std::size_t i = 0; i < trace.rows.size(); ++i) {
        const auto& row = trace.rows[i];
        json r;
        r["t"] = i + 1;
        json scores = json::array();
        for (const auto& s : row.sigma) scores.push_back(s.str());
        r["scores"] = std::move(scores);
        r["winner"] = trace.labels[static_cast<std::size_t>(row.winner)];
        r["cost"] = row.cost.str();
        rows.push_back(std::move(r));
      }
      doc["rows"] = std::move(rows);
      doc["wins"] = trace.wins;
      return doc.dump();
    }
  }
  return {};
}

BigInt trace_scale(const ModifiedTrace& trace) {
  BigInt scale = 1;
  for (const auto& row : trace.rows)
    for (const auto& s : row.scores) scale = boost::multiprecision::lcm(scale, s.den());
  return scale;
}

std::string render_trace(const ModifiedTrace& trace, OutputFormat format) {
  const BigInt scale = trace_scale(trace);
  const auto scaled = [&](const Rational& s) -> BigInt {
    return s.num() * (scale / s.den());
  };
  switch (format) {
    case OutputFormat::Text: {
      TextTable table;
      std::vector<std::string> header{"t"};
      for (const auto& l : trace.labels) header.push_back(l);
      header.push_back("winner");
      table.add(std::move(header));
      for (std::size_t i = 0; i < trace.rows.size(); ++i) {
        const auto& row = trace.rows[i];
        std::vector<std::string> cells{std::to_string(i + 1)};
        for (int j = 0; j < trace.m; ++j) {
          std::string cell = scaled(row.scores[j]).str();
          if (j == row.winner) cell.insert(cell.begin(), '*');
          cells.push_back(std::move(cell));
        }
        cells.push_back(trace.labels[static_cast<std::size_t>(row.winner)]);
        table.add(std::move(cells));
      }
      std::string out = table.str();
      out += "scores scaled by " + scale.str() + "\n";
      return out;
    }
    case OutputFormat::Csv: {
      std::string out = "t";
      for (const auto& l : trace.labels) out += ",s_" + l;
      for (const auto& l : trace.labels) out += ",dec_" + l;
      for (const auto& l : trace.labels) out += ",scaled_" + l;
      out += ",winner,scale\n";
      for (std::size_t i = 0; i < trace.rows.size(); ++i) {
        const auto& row = trace.rows[i];
        out += std::to_string(i + 1);
        for (int j = 0; j < trace.m; ++j) out += "," + to_fraction_string(row.scores[j]);
        for (int j = 0; j < trace.m; ++j)
          out += "," + fixed_decimal(row.scores[j].to_double(), 6);
        for (int j = 0; j < trace.m; ++j) out += "," + scaled(row.scores[j]).str();
        out += "," + trace.labels[static_cast<std::size_t>(row.winner)];
        out += "," + scale.str();
        out += '\n';
      }
      return out;
    }
    case OutputFormat::Json: {
      json doc;
      doc["method"] = "modified";
      doc["candidates"] = trace.labels;
      doc["scale"] = scale.str();
      json rows = json::array();
      for (std::size_t i = 0; i < trace.rows.size(); ++i) {
        const auto& row = trace.rows[i];
        json r;
        r["t"] = i + 1;
        json scores = json::array();
        json scaled_scores = json::array();
        json cumulative = json::array();
        for (const auto& s : row.scores) {
          scores.push_back(to_fraction_string(s));
          scaled_scores.push_back(scaled(s).str());
        }
        for (const auto& c : row.cumulative) cumulative.push_back(to_fraction_string(c));
        r["scores"] = std::move(scores);
        r["scaled"] = std::move(scaled_scores);
        r["cumulative"] = std::move(cumulative);
        r["winner"] = trace.labels[static_cast<std::size_t>(row.winner)];
        rows.push_back(std::move(r));
      }
      doc["rows"] = std::move(rows);
      doc["wins"] = trace.wins;
      return doc.dump();
    }
  }
  return {};
}

namespace {

json quota_event_json(const QuotaEvent& ev, const std::vector<std::string>& labels) {
  json e;
  e["t"] = ev.t;
  e["candidate"] = labels[static_cast<std::size_t>(ev.candidate)];
  e["cumulative_share"] = to_fraction_string(ev.cumulative_share);
  e["wins"] = ev.wins;
  e["upper_slack"] = ev.upper_slack.str();
  e["lower_deficit"] = ev.lower_deficit.str();
  return e;
}

} // namespace

std::string render_quota_report(const QuotaReport& report,
                                const std::vector<std::string>& labels, OutputFormat format) {
  if (format == OutputFormat::Json) {
    json doc;
    doc["candidates"] = report.m;
    doc["theorem5_cap"] = report.theorem5_cap.str();
    doc["upper_quota_ok"] = report.upper_quota_ok;
    doc["lower_quota_ok"] = report.lower_quota_ok;
    doc["theorem5_ok"] = report.theorem5_ok;
    doc["max_upper_slack"] = report.max_upper_slack.str();
    doc["max_lower_deficit"] = report.max_lower_deficit.str();
    const std::pair<const char*, const std::vector<QuotaEvent>*> lists[] = {
        {"upper_violations", &report.upper_violations},
        {"lower_violations", &report.lower_violations},
        {"theorem5_breaches", &report.theorem5_breaches},
        {"final", &report.final_standings},
    };
    for (const auto& [name, events] : lists) {
      json arr = json::array();
      for (const auto& ev : *events) arr.push_back(quota_event_json(ev, labels));
      doc[name] = std::move(arr);
    }
    return doc.dump();
  }

  std::ostringstream os;
  os << "variable upper quota: " << (report.upper_quota_ok ? "ok" : "VIOLATED") << "\n";
  os << "variable lower quota: " << (report.lower_quota_ok ? "ok" : "violated") << "\n";
  os << "max lower deficit: " << report.max_lower_deficit.str()
     << " (cap ceil((m-3)/2) = " << report.theorem5_cap.str() << ", "
     << (report.theorem5_ok ? "within" : "EXCEEDED") << ")\n";
  os << "final standings (t = last round):\n";
  TextTable table;
  table.add({"candidate", "cum share", "wins", "upper slack", "lower deficit"});
  for (const auto& ev : report.final_standings)
    table.add({labels[static_cast<std::size_t>(ev.candidate)],
               to_fraction_string(ev.cumulative_share), std::to_string(ev.wins),
               ev.upper_slack.str(), ev.lower_deficit.str()});
  os << table.str();
  if (!report.lower_violations.empty()) {
    const auto& first = report.lower_violations.front();
    os << "first lower-quota violation: candidate "
       << labels[static_cast<std::size_t>(first.candidate)] << " at t=" << first.t
       << " (wins " << first.wins << ", quota floor "
       << floor_int(first.cumulative_share).str() << ")\n";
  }
  return os.str();
}

ApportionRequest parse_apportion_request(std::string_view bytes) {
  json doc;
  try {
    doc = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("invalid apportionment JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("votes") || !doc["votes"].is_array())
    throw ValidationError("apportionment input needs a 'votes' array");
  if (!doc.contains("seats")) throw ValidationError("apportionment input needs 'seats'");
  ApportionRequest req;
  std::size_t i = 0;
  for (const auto& v : doc["votes"])
    req.votes.push_back(json_to_bigint(v, "votes[" + std::to_string(i++) + "]"));
  req.seats = doc["seats"].get<std::int64_t>();
  if (doc.contains("method")) {
    const std::string name = doc["method"].get<std::string>();
    req.method = method_from_name(name);
    if (!req.method) throw ValidationError("unknown method '" + name + "'");
  }
  return req;
}

namespace {

std::string seats_csv(const Seats& seats) {
  std::string out;
  for (std::size_t i = 0; i < seats.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(seats[i]);
  }
  return "(" + out + ")";
}

} // namespace

std::string render_solution(Method method, const Seats& seats, OutputFormat format) {
  if (format == OutputFormat::Json) {
    json doc;
    doc["method"] = std::string(method_name(method));
    doc["seats"] = seats;
    return doc.dump();
  }
  std::ostringstream os;
  os << method_display_name(method) << ": " << seats_csv(seats) << "\n";
  return os.str();
}

std::string render_comparison(const std::vector<std::pair<Method, Seats>>& solutions,
                              OutputFormat format) {
  if (format == OutputFormat::Json) {
    json doc = json::array();
    for (const auto& [method, seats] : solutions) {
      json entry;
      entry["method"] = std::string(method_name(method));
      entry["seats"] = seats;
      doc.push_back(std::move(entry));
    }
    return doc.dump();
  }
  TextTable table;
  for (const auto& [method, seats] : solutions)
    table.add({std::string(method_display_name(method)) + ":", seats_csv(seats)});
  return table.str();
}

namespace {

json problem_json(const ApportionmentProblem& problem) {
  json p;
  json shares = json::array();
  for (const auto& s : problem.shares) shares.push_back(to_fraction_string(s));
  p["shares"] = std::move(shares);
  p["seats"] = problem.seats;
  return p;
}

json witness_json(const Witness& w) {
  json doc;
  doc["problem"] = problem_json(w.problem);
  doc["solution"] = w.solution;
  if (w.problem_next) doc["problem_next"] = problem_json(*w.problem_next);
  if (w.solution_next) doc["solution_next"] = *w.solution_next;
  if (w.problem_prime) doc["problem_prime"] = problem_json(*w.problem_prime);
  if (w.solution_prime) doc["solution_prime"] = *w.solution_prime;
  if (w.party_pair) doc["pair"] = {w.party_pair->first, w.party_pair->second};
  doc["detail"] = w.detail;
  return doc;
}

} // namespace

std::string render_axiom_report_json(const AxiomReport& report) {
  json doc;
  doc["axiom"] = std::string(axiom_name(report.axiom));
  doc["method"] = std::string(method_name(report.method));
  doc["verdict"] = report.violated ? "violated" : "holds-on-tested-instances";
  doc["instances_checked"] = report.instances_checked;
  if (report.witness) doc["witness"] = witness_json(*report.witness);
  if (!report.skipped_pairs.empty()) {
    json skipped = json::array();
    for (const auto& [i, j] : report.skipped_pairs) skipped.push_back({i, j});
    doc["skipped_pairs"] = std::move(skipped);
  }
  return doc.dump();
}

std::string render_axiom_table(const AxiomTable& table, OutputFormat format) {
  if (format == OutputFormat::Json) {
    json doc;
    doc["instances"] = table.config.instances;
    doc["seed"] = table.config.seed;
    doc["frege_max_lower_deficit"] = table.frege_max_lower_deficit.str();
    json cells = json::array();
    for (const auto& cell : table.cells) cells.push_back(json::parse(render_axiom_report_json(cell)));
    doc["cells"] = std::move(cells);
    return doc.dump();
  }
  TextTable text;
  std::vector<std::string> header{""};
  for (Axiom axiom : kAllAxioms) header.emplace_back(axiom_display_name(axiom));
  text.add(std::move(header));
  for (Method method : kAllMethods) {
    std::vector<std::string> row{std::string(method_display_name(method))};
    for (Axiom axiom : kAllAxioms)
      row.emplace_back(table.cell(method, axiom).violated ? "-" : "+");
    text.add(std::move(row));
  }
  std::ostringstream os;
  os << text.str();
  os << "('+' = no counterexample on " << table.config.instances
     << " seeded instances, '-' = witness found; verdicts are not proofs)\n";
  os << "witnesses:\n";
  for (const auto& cell : table.cells)
    if (cell.violated && cell.witness) os << "  " << cell.witness->detail << "\n";
  return os.str();
}

std::string render_bias_report(const BiasReport& report, OutputFormat format) {
  if (format == OutputFormat::Json) {
    json doc;
    doc["parties"] = report.parties;
    doc["max_votes"] = report.max_votes;
    doc["seats"] = report.seats;
    doc["samples"] = report.samples;
    doc["seed"] = report.seed;
    doc["smallest_ties"] = report.smallest_ties;
    doc["largest_ties"] = report.largest_ties;
    json methods = json::array();
    for (const auto& mb : report.methods) {
      json entry;
      entry["method"] = std::string(method_name(mb.method));
      entry["favored"] = mb.favored;
      entry["not_favored"] = mb.not_favored;
      entry["skipped"] = mb.skipped;
      entry["smallest_zero_seats"] = mb.smallest_zero_seats;
      entry["fraction"] = fixed_decimal(mb.fraction(), 6);
      entry["ci_half_width"] = fixed_decimal(mb.ci_half_width(), 6);
      methods.push_back(std::move(entry));
    }
    doc["methods"] = std::move(methods);
    return doc.dump();
  }
  TextTable table;
  table.add({"", "bias", "95% confidence interval"});
  for (const auto& mb : report.methods) {
    const double f = mb.fraction() * 100.0;
    const double hw = mb.ci_half_width() * 100.0;
    table.add({std::string(method_display_name(mb.method)), fixed_decimal(f, 1) + "%",
               "(" + fixed_decimal(f - hw, 2) + "%, " + fixed_decimal(f + hw, 2) + "%)"});
  }
  std::ostringstream os;
  os << table.str();
  os << "samples: " << report.samples << ", seed: " << report.seed
     << ", smallest-party ties: " << report.smallest_ties
     << ", largest-party ties: " << report.largest_ties << "\n";
  return os.str();
}

} // namespace frege

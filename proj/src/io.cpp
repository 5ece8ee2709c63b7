#include "ranklab/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace ranklab {

namespace {

std::string trim(const std::string& s) {
  size_t begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  size_t end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(s);
  while (std::getline(in, field, sep)) out.push_back(trim(field));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

long long parse_score(const std::string& s, int line_no) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw Error(Errc::ParseError,
                "line " + std::to_string(line_no) + ": score '" + s + "' is not a nonnegative integer");
  }
  return std::stoll(s);
}

}  // namespace

Tournament read_tournament_csv(std::istream& in) {
  std::vector<std::string> roster;
  bool roster_fixed = false;
  struct Row {
    std::string a, b;
    long long sa, sb;
  };
  std::vector<Row> rows;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string s = trim(line);
    if (s.empty()) continue;
    if (s[0] == '#') {
      const std::string header = "#players:";
      if (s.rfind(header, 0) == 0) {
        if (roster_fixed || !roster.empty()) {
          throw Error(Errc::ParseError,
                      "line " + std::to_string(line_no) +
                          ": the roster header must be the first non-comment line");
        }
        for (const std::string& name : split(s.substr(header.size()), ',')) {
          if (name.empty()) {
            throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": empty player name");
          }
          roster.push_back(name);
        }
        roster_fixed = true;
      }
      continue;  // other # lines are comments
    }
    const auto fields = split(s, ',');
    if (fields.size() != 4) {
      throw Error(Errc::ParseError,
                  "line " + std::to_string(line_no) + ": expected player_i,player_j,score_i,score_j");
    }
    Row row{fields[0], fields[1], parse_score(fields[2], line_no), parse_score(fields[3], line_no)};
    if (row.a.empty() || row.b.empty()) {
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": empty player name");
    }
    for (const std::string& name : {row.a, row.b}) {
      if (std::find(roster.begin(), roster.end(), name) == roster.end()) {
        if (roster_fixed) {
          throw Error(Errc::UnknownPlayer, "line " + std::to_string(line_no) + ": '" + name +
                                               "' is not in the declared roster");
        }
        roster.push_back(name);
      }
    }
    rows.push_back(std::move(row));
  }

  Tournament t(roster);
  for (const Row& row : rows) {
    t.add_match(t.id_of(row.a), t.id_of(row.b), row.sa, row.sb);
  }
  return t;
}

void write_tournament_csv(const Tournament& t, std::ostream& out) {
  for (const std::string& name : t.roster()) {
    // names that CSV cannot carry round-trip only through JSON
    if (name.empty() || name[0] == '#' || name.find_first_of(",\n\r") != std::string::npos) {
      throw Error(Errc::ParseError, "player name '" + name + "' cannot be written as CSV");
    }
  }
  out << "#players:";
  for (size_t i = 0; i < t.roster().size(); ++i) out << (i ? "," : " ") << t.roster()[i];
  out << "\n";
  for (const Match& m : t.matches()) {
    out << t.label(m.i) << "," << t.label(m.j) << "," << m.score_i << "," << m.score_j << "\n";
  }
}

Tournament tournament_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("roster") || !j.contains("matches")) {
    throw Error(Errc::ParseError, "tournament JSON needs 'roster' and 'matches'");
  }
  std::vector<std::string> roster;
  for (const auto& name : j.at("roster")) {
    if (!name.is_string()) throw Error(Errc::ParseError, "roster entries must be strings");
    roster.push_back(name.get<std::string>());
  }
  Tournament t(std::move(roster));
  for (const auto& row : j.at("matches")) {
    if (!row.is_array() || row.size() != 4) {
      throw Error(Errc::ParseError, "each match must be [i,j,score_i,score_j]");
    }
    t.add_match(row[0].get<int>(), row[1].get<int>(), row[2].get<long long>(),
                row[3].get<long long>());
  }
  return t;
}

nlohmann::json tournament_to_json(const Tournament& t) {
  nlohmann::json j;
  j["roster"] = t.roster();
  j["matches"] = nlohmann::json::array();
  for (const Match& m : t.matches()) {
    j["matches"].push_back({m.i, m.j, m.score_i, m.score_j});
  }
  return j;
}

namespace {

bool has_json_extension(const std::string& path) {
  return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

}  // namespace

Tournament load_tournament_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Errc::ParseError, "cannot open '" + path + "'");
  }
  if (has_json_extension(path)) {
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw Error(Errc::ParseError, std::string("invalid JSON: ") + e.what());
    }
    return tournament_from_json(j);
  }
  return read_tournament_csv(in);
}

void save_tournament_file(const Tournament& t, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error(Errc::ParseError, "cannot write '" + path + "'");
  }
  if (has_json_extension(path)) {
    out << tournament_to_json(t).dump(2) << "\n";
  } else {
    write_tournament_csv(t, out);
  }
}

nlohmann::json ranking_to_json(const Ranking& r) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& c : r.classes) classes.push_back(c);
  return classes;
}

nlohmann::json rating_to_json(const RatingVector& rv) {
  nlohmann::json j;
  j["method"] = method_name(rv.method);
  if (rv.alpha) j["alpha"] = fraction_string(*rv.alpha);
  nlohmann::json ratings = nlohmann::json::object();
  for (size_t i = 0; i < rv.labels.size(); ++i) {
    ratings[rv.labels[i]] = fraction_string(rv.ratings[i]);
  }
  j["ratings"] = ratings;
  j["ranking"] = ranking_to_json(ranking_from_ratings(rv));
  return j;
}

nlohmann::json paradox_report_to_json(const ParadoxReport& report) {
  nlohmann::json j;
  j["method"] = method_name(report.method);
  if (report.alpha) j["alpha"] = fraction_string(*report.alpha);
  j["verdict"] = verdict_name(report.verdict);
  j["before"] = ranking_to_json(report.before);
  if (report.deleted) j["deleted"] = *report.deleted;
  if (report.after) j["after"] = ranking_to_json(*report.after);
  nlohmann::json before_ratings = nlohmann::json::object();
  for (size_t i = 0; i < report.before_ratings.labels.size(); ++i) {
    before_ratings[report.before_ratings.labels[i]] =
        fraction_string(report.before_ratings.ratings[i]);
  }
  j["ratings_before"] = before_ratings;
  if (report.after_ratings) {
    nlohmann::json after_ratings = nlohmann::json::object();
    for (size_t i = 0; i < report.after_ratings->labels.size(); ++i) {
      after_ratings[report.after_ratings->labels[i]] =
          fraction_string(report.after_ratings->ratings[i]);
    }
    j["ratings_after"] = after_ratings;
  }
  return j;
}

nlohmann::json property_report_to_json(const PropertyReport& report) {
  nlohmann::json j;
  j["property"] = report.property;
  j["method"] = method_name(report.method);
  if (report.alpha) j["alpha"] = fraction_string(*report.alpha);
  j["pass"] = report.pass;
  j["cases_checked"] = report.cases_checked;
  if (report.first_violation) j["first_violation"] = *report.first_violation;
  if (report.counterexample) j["counterexample"] = *report.counterexample;
  if (report.counterexample_tournament) {
    j["counterexample_tournament"] = tournament_to_json(*report.counterexample_tournament);
  }
  if (!report.per_case.empty()) {
    nlohmann::json cases = nlohmann::json::array();
    for (const auto& [k, held] : report.per_case) {
      cases.push_back({{"k", k}, {"held", held}});
    }
    j["cases"] = cases;
  }
  return j;
}

}  // namespace ranklab

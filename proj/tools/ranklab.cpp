// Command-line front end: ingest match files, generate the special
// tournaments, rank, and run the paradox / axiom experiments.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ranklab/io.hpp"
#include "ranklab/methods.hpp"
#include "ranklab/paradox.hpp"

using namespace ranklab;

namespace {

struct RunConfig {
  std::string input;
  std::string output;
  std::string method;
  std::string alpha = "85/100";
  std::string format;  // rank/paradox/...: text|json, generate: csv|json
  std::string kind;
  std::string order;
  std::string grid;
  std::string axiom = "all";
  int n = 0;
  int k = 0;
  int l = 0;
  int k_max = 16;
  uint64_t seed = 1;
};

std::ostream& open_output(const RunConfig& cfg, std::ofstream& file) {
  if (cfg.output.empty()) return std::cout;
  file.open(cfg.output);
  if (!file) throw Error(Errc::ParseError, "cannot write '" + cfg.output + "'");
  return file;
}

void require_format(const RunConfig& cfg, bool generating) {
  const std::string& f = cfg.format;
  if (f.empty()) return;
  if (generating ? (f == "csv" || f == "json") : (f == "text" || f == "json")) return;
  throw Error(Errc::ParseError, "unknown --format '" + f + "'");
}

Method require_method(const RunConfig& cfg) {
  auto m = parse_method(cfg.method);
  if (!m) throw Error(Errc::ParseError, "unknown method '" + cfg.method + "'");
  return *m;
}

Rational require_alpha(const RunConfig& cfg) {
  auto a = parse_rational(cfg.alpha);
  if (!a || *a < 0 || *a > 1) {
    throw Error(Errc::ParseError, "alpha must be a rational in [0,1], got '" + cfg.alpha + "'");
  }
  return *a;
}

std::vector<PlayerId> parse_order(const std::string& text) {
  std::vector<PlayerId> order;
  std::stringstream in(text);
  std::string field;
  while (std::getline(in, field, ',')) {
    try {
      order.push_back(std::stoi(field));
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, "bad --order entry '" + field + "'");
    }
  }
  if (order.empty()) throw Error(Errc::ParseError, "--order must list player indices");
  return order;
}

std::vector<Rational> parse_grid(const std::string& text) {
  const auto first = text.find(':');
  const auto second = text.find(':', first == std::string::npos ? first : first + 1);
  if (first == std::string::npos || second == std::string::npos) {
    throw Error(Errc::ParseError, "--grid expects start:end:step");
  }
  const auto start = parse_rational(text.substr(0, first));
  const auto end = parse_rational(text.substr(first + 1, second - first - 1));
  const auto step = parse_rational(text.substr(second + 1));
  if (!start || !end || !step || *step <= 0 || *start < 0 || *end > 1 || *start > *end) {
    throw Error(Errc::ParseError, "--grid needs 0 <= start <= end <= 1 and step > 0");
  }
  std::vector<Rational> grid;
  for (Rational v = *start; v <= *end; v += *step) grid.push_back(v);
  return grid;
}

void print_rating_table(const RatingVector& rv, std::ostream& out) {
  out << "method: " << method_name(rv.method);
  if (rv.alpha) out << " (alpha = " << fraction_string(*rv.alpha) << ")";
  out << "\n";
  size_t label_w = 6, frac_w = 8;
  for (size_t i = 0; i < rv.labels.size(); ++i) {
    label_w = std::max(label_w, rv.labels[i].size());
    frac_w = std::max(frac_w, fraction_string(rv.ratings[i]).size());
  }
  for (size_t i = 0; i < rv.labels.size(); ++i) {
    out << "  " << std::left << std::setw(static_cast<int>(label_w + 2)) << rv.labels[i]
        << std::setw(static_cast<int>(frac_w + 2)) << fraction_string(rv.ratings[i])
        << decimal_string(rv.ratings[i]) << "\n";
  }
  out << "ranking: " << format_ranking(ranking_from_ratings(rv)) << "\n";
}

int cmd_rank(const RunConfig& cfg) {
  require_format(cfg, false);
  const Tournament t = load_tournament_file(cfg.input);
  const Method m = require_method(cfg);
  const RatingVector rv = rate(t, m, require_alpha(cfg));
  std::ofstream file;
  std::ostream& out = open_output(cfg, file);
  if (cfg.format == "json") {
    out << rating_to_json(rv).dump(2) << "\n";
  } else {
    print_rating_table(rv, out);
  }
  return 0;
}

int cmd_generate(const RunConfig& cfg) {
  require_format(cfg, true);
  Tournament t = Tournament::with_default_roster(0);
  std::vector<PlayerId> order;
  if (!cfg.order.empty()) {
    order = parse_order(cfg.order);
    if (cfg.n != 0 && cfg.n != static_cast<int>(order.size())) {
      throw Error(Errc::ParseError, "--n disagrees with the length of --order");
    }
  } else if (cfg.n > 0) {
    for (int i = 1; i <= cfg.n; ++i) order.push_back(i);
  }

  if (cfg.kind == "perfect" || cfg.kind == "condorcet") {
    if (order.empty()) {
      throw Error(Errc::ParseError, "--kind " + cfg.kind + " needs --order or --n");
    }
    t = cfg.kind == "perfect" ? perfect(order) : condorcet(order);
  } else if (cfg.kind == "ring") {
    t = ring_plus(cfg.n);
  } else if (cfg.kind == "chain-minus") {
    t = chain_minus(cfg.n);
  } else if (cfg.kind == "chain-plus") {
    t = chain_plus(cfg.n);
  } else if (cfg.kind == "z") {
    t = z_tournament(cfg.n, cfg.k, cfg.l);
  } else if (cfg.kind == "witness") {
    t = theorem_witness(cfg.n, cfg.k);
  } else {
    throw Error(Errc::ParseError, "unknown --kind '" + cfg.kind + "'");
  }

  const bool as_json = cfg.format == "json" ||
                       (cfg.format.empty() && cfg.output.size() >= 5 &&
                        cfg.output.compare(cfg.output.size() - 5, 5, ".json") == 0);
  if (!cfg.output.empty()) {
    if (as_json) {
      std::ofstream out(cfg.output);
      if (!out) throw Error(Errc::ParseError, "cannot write '" + cfg.output + "'");
      out << tournament_to_json(t).dump(2) << "\n";
    } else {
      std::ofstream out(cfg.output);
      if (!out) throw Error(Errc::ParseError, "cannot write '" + cfg.output + "'");
      write_tournament_csv(t, out);
    }
  } else if (as_json) {
    std::cout << tournament_to_json(t).dump(2) << "\n";
  } else {
    write_tournament_csv(t, std::cout);
  }
  return 0;
}

int cmd_paradox(const RunConfig& cfg) {
  require_format(cfg, false);
  const Tournament t = load_tournament_file(cfg.input);
  const ParadoxReport report = inversion_check(t, require_method(cfg), require_alpha(cfg));
  std::ofstream file;
  std::ostream& out = open_output(cfg, file);
  if (cfg.format == "json") {
    out << paradox_report_to_json(report).dump(2) << "\n";
    return 0;
  }
  out << "method:  " << method_name(report.method);
  if (report.alpha) out << " (alpha = " << fraction_string(*report.alpha) << ")";
  out << "\n";
  out << "before:  " << format_ranking(report.before) << "\n";
  out << "deleted: " << (report.deleted ? *report.deleted : std::string("-")) << "\n";
  if (report.after) out << "after:   " << format_ranking(*report.after) << "\n";
  out << "verdict: " << verdict_name(report.verdict) << "\n";
  return 0;
}

void print_property(const PropertyReport& report, std::ostream& out) {
  out << report.property << ": " << (report.pass ? "PASS" : "FAIL") << " ("
      << report.cases_checked << " cases)";
  if (report.counterexample) out << " -- " << *report.counterexample;
  out << "\n";
}

int cmd_properties(const RunConfig& cfg) {
  require_format(cfg, false);
  const Method m = require_method(cfg);
  const Rational alpha = require_alpha(cfg);
  if (cfg.n < 2) throw Error(Errc::ParseError, "--n must be at least 2");

  std::vector<PlayerId> forward, backward;
  for (int i = 1; i <= cfg.n; ++i) forward.push_back(i);
  backward.assign(forward.rbegin(), forward.rend());

  const bool want_all = cfg.axiom == "all";
  std::vector<PropertyReport> reports;

  if (want_all || cfg.axiom == "natural") {
    reports.push_back(check_natural(m, cfg.n, 100, cfg.seed, alpha));
  }
  if (want_all || cfg.axiom == "condorcet") {
    reports.push_back(
        check_condorcet_reducibility(m, perfect(forward), backward, cfg.k_max, alpha));
  }
  if (want_all || cfg.axiom == "long-tournament") {
    PropertyReport report;
    report.property = "long-tournament";
    report.method = m;
    if (m == Method::Markov) report.alpha = alpha;
    report.cases_checked = cfg.k_max;
    const auto k = find_long_tournament_k(m, perfect(forward), perfect(backward), cfg.k_max, alpha);
    report.pass = k.has_value();
    if (k) {
      report.counterexample = "target ranking reached at k = " + std::to_string(*k);
    } else {
      report.counterexample = "no k <= " + std::to_string(cfg.k_max) + " reaches the target ranking";
    }
    reports.push_back(std::move(report));
  }
  if (reports.empty()) {
    throw Error(Errc::ParseError, "unknown --axiom '" + cfg.axiom + "'");
  }

  std::ofstream file;
  std::ostream& out = open_output(cfg, file);
  if (cfg.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : reports) j.push_back(property_report_to_json(r));
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : reports) print_property(r, out);
  }
  return 0;
}

int cmd_scan_alpha(const RunConfig& cfg) {
  require_format(cfg, false);
  const Tournament t = load_tournament_file(cfg.input);
  std::vector<Rational> grid = parse_grid(cfg.grid);
  // the endpoints 0 and 1 stay on the grid only when the chain accepts them
  std::vector<Rational> kept;
  for (const Rational& a : grid) {
    if (a == 0 || a == 1) {
      try {
        markov(t, a);
      } catch (const Error& e) {
        if (e.code() == Errc::NonUniqueStationary) continue;
        throw;
      }
    }
    kept.push_back(a);
  }
  const auto points = scan_alpha_thresholds(t, kept);
  std::ofstream file;
  std::ostream& out = open_output(cfg, file);
  if (cfg.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& p : points) {
      j.push_back({{"alpha", fraction_string(p.alpha)},
                   {"ranking", ranking_to_json(p.ranking)},
                   {"change", p.change_from_prev}});
    }
    out << j.dump(2) << "\n";
    return 0;
  }
  size_t alpha_w = 7;
  for (const auto& p : points) alpha_w = std::max(alpha_w, fraction_string(p.alpha).size());
  for (const auto& p : points) {
    out << std::left << std::setw(static_cast<int>(alpha_w + 2)) << fraction_string(p.alpha)
        << (p.change_from_prev ? "* " : "  ") << format_ranking(p.ranking) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"exact-arithmetic tournament ranking toolkit"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* cmd, bool with_method) {
    if (with_method) {
      cmd->add_option("--method", cfg.method, "borda | massey | colley | markov")->required();
      cmd->add_option("--alpha", cfg.alpha, "markov damping, rational or decimal (default 85/100)");
    }
    cmd->add_option("--output", cfg.output, "write here instead of stdout");
    cmd->add_option("--format", cfg.format, "text | json (csv | json for generate)");
  };

  CLI::App* rank = app.add_subcommand("rank", "rate and rank a tournament file");
  rank->add_option("--input", cfg.input, "tournament file (CSV or JSON)")->required();
  add_common(rank, true);

  CLI::App* generate = app.add_subcommand("generate", "emit one of the built-in tournaments");
  generate->add_option("--kind", cfg.kind,
                       "perfect | condorcet | ring | chain-minus | chain-plus | z | witness")
      ->required();
  generate->add_option("--n", cfg.n, "number of players");
  generate->add_option("--k", cfg.k, "cycle multiplicity (z, witness)");
  generate->add_option("--l", cfg.l, "chain multiplicity (z)");
  generate->add_option("--order", cfg.order, "permutation, e.g. 3,1,2 (perfect, condorcet)");
  add_common(generate, false);

  CLI::App* paradox = app.add_subcommand("paradox", "delete the last-ranked player and compare");
  paradox->add_option("--input", cfg.input, "tournament file")->required();
  add_common(paradox, true);

  CLI::App* properties = app.add_subcommand("properties", "run the axiom checks");
  properties->add_option("--axiom", cfg.axiom, "natural | condorcet | long-tournament | all");
  properties->add_option("--n", cfg.n, "roster size for the generated checks")->required();
  properties->add_option("--k-max", cfg.k_max, "search bound (default 16)");
  properties->add_option("--seed", cfg.seed, "seed for the permutation trials");
  add_common(properties, true);

  CLI::App* scan = app.add_subcommand("scan-alpha", "markov ranking across a damping grid");
  scan->add_option("--input", cfg.input, "tournament file")->required();
  scan->add_option("--grid", cfg.grid, "start:end:step, e.g. 0.05:1:0.05")->required();
  add_common(scan, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (rank->parsed()) return cmd_rank(cfg);
    if (generate->parsed()) return cmd_generate(cfg);
    if (paradox->parsed()) return cmd_paradox(cfg);
    if (properties->parsed()) return cmd_properties(cfg);
    if (scan->parsed()) return cmd_scan_alpha(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_input_error(e.code()) ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

#include "ranklab/paradox.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

namespace ranklab {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Inversion: return "Inversion";
    case Verdict::Perturbed: return "Perturbed";
    case Verdict::Unchanged: return "Unchanged";
    case Verdict::NotApplicable: return "NotApplicable";
  }
  return "?";
}

ParadoxReport inversion_check(const Tournament& t, Method m,
                              const std::optional<Rational>& alpha) {
  ParadoxReport report;
  report.method = m;
  if (m == Method::Markov) report.alpha = alpha.value_or(kDefaultAlpha);
  report.before_ratings = rate(t, m, alpha);
  report.before = ranking_from_ratings(report.before_ratings);
  if (!report.before.strict()) {
    report.verdict = Verdict::NotApplicable;
    return report;
  }

  const std::string last = report.before.classes.back().front();
  report.deleted = last;
  const Tournament survivors_t = delete_player(t, t.id_of(last));
  report.after_ratings = rate(survivors_t, m, alpha);
  report.after = ranking_from_ratings(*report.after_ratings);

  if (!report.after->strict()) {
    report.verdict = Verdict::NotApplicable;
    return report;
  }
  const Ranking survivors = report.before.without(last);
  if (*report.after == survivors) {
    report.verdict = Verdict::Unchanged;
  } else if (*report.after == survivors.reversed()) {
    report.verdict = Verdict::Inversion;
  } else {
    report.verdict = Verdict::Perturbed;
  }
  return report;
}

Tournament theorem_witness(int n, int k) {
  if (n < 3) {
    throw Error(Errc::TooFewPlayers, "witness construction needs at least 3 players");
  }
  if (k < 0) {
    throw Error(Errc::EmptyParameters, "witness multiplier must be >= 0");
  }
  std::vector<PlayerId> forward(static_cast<size_t>(n));
  std::iota(forward.begin(), forward.end(), PlayerId{1});
  Tournament t = perfect(forward);
  if (k > 0) {
    std::vector<PlayerId> backward(forward.rbegin(), forward.rend());
    t = tournament_union(t, repeat(k, condorcet(backward)));
  }
  return t;
}

namespace {

Ranking strict_order_of(const std::vector<PlayerId>& order, const Tournament& t) {
  Ranking r;
  for (PlayerId p : order) r.classes.push_back({t.label(p)});
  return r;
}

std::string order_string(const std::vector<PlayerId>& order) {
  std::ostringstream out;
  for (size_t i = 0; i < order.size(); ++i) {
    if (i) out << ",";
    out << order[i];
  }
  return out.str();
}

// Fisher-Yates on the standard mt19937_64 stream, so trial sequences are
// identical on every platform.
void deterministic_shuffle(std::vector<PlayerId>& v, std::mt19937_64& rng) {
  for (size_t i = v.size(); i > 1; --i) {
    const size_t j = static_cast<size_t>(rng() % i);
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace

PropertyReport check_natural(Method m, int n, int trials, uint64_t seed,
                             const std::optional<Rational>& alpha) {
  if (n < 2) {
    throw Error(Errc::TooFewPlayers, "naturality check needs at least 2 players");
  }
  PropertyReport report;
  report.property = "natural";
  report.method = m;
  if (m == Method::Markov) report.alpha = alpha.value_or(kDefaultAlpha);

  auto run_case = [&](const std::vector<PlayerId>& order) {
    const Tournament t = perfect(order);
    const Ranking got = ranking_from_ratings(rate(t, m, alpha));
    const Ranking expected = strict_order_of(order, t);
    report.cases_checked += 1;
    const bool held = got == expected;
    if (!held && !report.counterexample) {
      report.pass = false;
      report.first_violation = report.cases_checked;
      report.counterexample = "perfect(" + order_string(order) + ") ranked " + format_ranking(got);
      report.counterexample_tournament = t;
    }
    return held;
  };

  std::vector<PlayerId> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), PlayerId{1});
  if (n <= 4) {
    // small rosters: every permutation instead of sampling
    std::sort(order.begin(), order.end());
    do {
      run_case(order);
    } while (std::next_permutation(order.begin(), order.end()));
  } else {
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
      deterministic_shuffle(order, rng);
      run_case(order);
    }
  }
  return report;
}

PropertyReport check_condorcet_reducibility(Method m, const Tournament& t,
                                            const std::vector<PlayerId>& c_order, int k_max,
                                            const std::optional<Rational>& alpha) {
  PropertyReport report;
  report.property = "condorcet-reducible";
  report.method = m;
  if (m == Method::Markov) report.alpha = alpha.value_or(kDefaultAlpha);

  if (static_cast<int>(c_order.size()) != t.player_count()) {
    throw Error(Errc::InvalidPermutation, "Condorcet order must cover the whole roster");
  }
  const Ranking base = ranking_from_ratings(rate(t, m, alpha));
  Tournament block(t.roster());
  const Tournament block_proto = condorcet(c_order);
  for (const Match& match : block_proto.matches()) block.add_match(match);
  Tournament sum = t;
  for (int k = 1; k <= k_max; ++k) {
    sum = tournament_union(sum, block);
    const Ranking got = ranking_from_ratings(rate(sum, m, alpha));
    report.cases_checked += 1;
    const bool held = got == base;
    report.per_case.emplace_back(k, held);
    if (!held && !report.first_violation) {
      report.pass = false;
      report.first_violation = k;
      report.counterexample = "adding " + std::to_string(k) +
                              " Condorcet block(s) changed the ranking to " + format_ranking(got);
      report.counterexample_tournament = sum;
    }
  }
  return report;
}

std::optional<int> find_long_tournament_k(Method m, const Tournament& t1, const Tournament& t2,
                                          int k_max, const std::optional<Rational>& alpha) {
  const Ranking target = ranking_from_ratings(rate(t2, m, alpha));
  if (!target.strict()) {
    throw Error(Errc::NotStrictOrder, "long-tournament target ranking has ties");
  }
  Tournament sum = t1;
  for (int k = 1; k <= k_max; ++k) {
    sum = tournament_union(sum, t2);
    if (ranking_from_ratings(rate(sum, m, alpha)) == target) return k;
  }
  return std::nullopt;
}

double ZClosedForm::colley_tilde(int i) const {
  return colley_a * std::pow(colley_x, i) + colley_b * std::pow(colley_y, i);
}

double ZClosedForm::colley_tilde_after(int i) const {
  return colley_a_prime * std::pow(colley_x, i) + colley_b_prime * std::pow(colley_y, i);
}

namespace {

ZClosedForm z_closed_form(int n, int k, int l) {
  if (n < 3) {
    throw Error(Errc::TooFewPlayers, "Z closed form needs at least 3 players");
  }
  if (k < 0 || l < 0 || (k == 0 && l == 0)) {
    throw Error(Errc::EmptyParameters, "Z closed form needs (k,l) != (0,0)");
  }
  ZClosedForm cf;
  cf.n = n;
  cf.k = k;
  cf.l = l;

  // Massey: r_i = alpha + beta*i with sum of the n ratings equal to 0.
  cf.massey_beta = rat(-l, l + k * n);
  cf.massey_alpha = -cf.massey_beta * rat(n + 1, 2);
  // After deleting Pn there are n-1 ratings summing to 0.
  cf.massey_beta_prime = rat(k - l, k + l);
  cf.massey_alpha_prime = -cf.massey_beta_prime * rat(n, 2);

  // Colley: roots of (k+l)t^2 - 2(1+k+l)t + (k+l) = 0.
  const double s = k + l;
  const double root = std::sqrt(2.0 * s + 1.0);
  cf.colley_x = 1.0 + 1.0 / s - root / s;
  cf.colley_y = 1.0 + 1.0 / s + root / s;

  // 2x2 boundary systems for the coefficients in a*x^i + b*y^i. Before the
  // deletion the first/last rows of C r~ = p read
  //   (2k+l+2) r1 - (k+l) r2 - k rn   = l
  //   -k r1 - (k+l) r(n-1) + (2k+l+2) rn = -l
  // and after it (the cycle edge is gone)
  //   (k+l+2) r1 - (k+l) r2           = l - k
  //   -(k+l) r(n-2) + (k+l+2) r(n-1)  = k - l
  auto solve2 = [](double a11, double a12, double a21, double a22, double b1, double b2,
                   double& u, double& v) {
    const double det = a11 * a22 - a12 * a21;
    u = (b1 * a22 - b2 * a12) / det;
    v = (a11 * b2 - a21 * b1) / det;
  };
  auto powi = [](double base, int e) { return std::pow(base, e); };

  const double x = cf.colley_x, y = cf.colley_y;
  solve2((2 * k + l + 2) * x - s * x * x - k * powi(x, n),
         (2 * k + l + 2) * y - s * y * y - k * powi(y, n),
         -k * x - s * powi(x, n - 1) + (2 * k + l + 2) * powi(x, n),
         -k * y - s * powi(y, n - 1) + (2 * k + l + 2) * powi(y, n), static_cast<double>(l),
         static_cast<double>(-l), cf.colley_a, cf.colley_b);

  solve2((k + l + 2) * x - s * x * x, (k + l + 2) * y - s * y * y,
         -s * powi(x, n - 2) + (k + l + 2) * powi(x, n - 1),
         -s * powi(y, n - 2) + (k + l + 2) * powi(y, n - 1), static_cast<double>(l - k),
         static_cast<double>(k - l), cf.colley_a_prime, cf.colley_b_prime);

  return cf;
}

}  // namespace

ZClosedForm massey_z_closed_form(int n, int k, int l) { return z_closed_form(n, k, l); }

ZClosedForm colley_z_closed_form(int n, int k, int l) { return z_closed_form(n, k, l); }

bool z_inversion_predicate(int n, int k, int l, Method m) {
  if (m != Method::Massey && m != Method::Colley) {
    throw Error(Errc::ParseError, "the Z inversion criterion covers massey and colley only");
  }
  (void)n;
  return k > l && l > 0;
}

RegularityInfo regularity(const Tournament& t) {
  RegularityInfo info;
  const int n = t.player_count();
  if (n < 2 || t.matches().empty()) return info;
  for (const Match& m : t.matches()) {
    const long long hi = std::max(m.score_i, m.score_j);
    const long long lo = std::min(m.score_i, m.score_j);
    if (hi != 1 || lo != 0) return info;
  }
  const auto st = stats(t);
  long long per_pair = -1;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const auto& vs = st[static_cast<size_t>(i - 1)].matches_vs;
      const auto it = vs.find(j);
      const long long count = it == vs.end() ? 0 : it->second;
      if (per_pair == -1) per_pair = count;
      if (count != per_pair) return info;
    }
  }
  if (per_pair <= 0) return info;
  info.is_union_of_perfect = true;
  info.t = per_pair;
  return info;
}

LeastSquaresSystem build_incidence_system(const Tournament& t) {
  LeastSquaresSystem sys;
  const size_t n = static_cast<size_t>(t.player_count());
  sys.x = zeros(t.match_count(), n);
  sys.s.assign(t.match_count(), Rational(0));
  for (size_t row = 0; row < t.match_count(); ++row) {
    const Match& m = t.matches()[row];
    sys.x[row][static_cast<size_t>(m.i - 1)] = 1;
    sys.x[row][static_cast<size_t>(m.j - 1)] = -1;
    sys.s[row] = rat(m.score_i - m.score_j);
  }
  return sys;
}

RatingVector massey_least_squares_oracle(const Tournament& t) {
  // deliberately re-derives everything from the raw incidence rows
  if (t.player_count() == 0) {
    throw Error(Errc::EmptyParameters, "massey needs a nonempty roster");
  }
  if (t.has_draw()) {
    throw Error(Errc::DrawNotSupported, "massey needs a winner in every match");
  }
  const LeastSquaresSystem sys = build_incidence_system(t);
  const size_t n = static_cast<size_t>(t.player_count());
  const size_t rows = sys.x.size();

  std::vector<bool> appears(n, false);
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < n; ++c) {
      if (sys.x[r][c] != 0) appears[c] = true;
    }
  }
  for (size_t c = 0; c < n; ++c) {
    if (!appears[c]) {
      throw Error(Errc::IsolatedPlayer, t.label(static_cast<PlayerId>(c + 1)) + " has no matches");
    }
  }

  RatMatrix normal = zeros(n, n);
  RatVec rhs(n, Rational(0));
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c1 = 0; c1 < n; ++c1) {
      if (sys.x[r][c1] == 0) continue;
      rhs[c1] += sys.x[r][c1] * sys.s[r];
      for (size_t c2 = 0; c2 < n; ++c2) {
        if (sys.x[r][c2] != 0) normal[c1][c2] += sys.x[r][c1] * sys.x[r][c2];
      }
    }
  }
  normal[n - 1].assign(n, Rational(1));
  rhs[n - 1] = 0;
  auto solution = solve_unique(std::move(normal), std::move(rhs));
  if (!solution) {
    throw Error(Errc::SingularSystem, "normal equations are singular");
  }
  RatingVector rv;
  rv.method = Method::Massey;
  rv.labels = t.roster();
  rv.ratings = std::move(*solution);
  return rv;
}

std::vector<double> markov_power_iteration_oracle(const Tournament& t, const Rational& alpha,
                                                  int iterations) {
  if (alpha < 0 || alpha >= 1) {
    throw Error(Errc::InvalidAlpha, "power iteration needs alpha in [0,1)");
  }
  const MarkovSystem sys = build_markov_system(t, alpha);
  const size_t n = sys.a.size();
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < n; ++c) a[r][c] = as_double(sys.a[r][c]);
  }
  std::vector<double> v(n, 1.0 / static_cast<double>(n));
  std::vector<double> next(n, 0.0);
  for (int it = 0; it < iterations; ++it) {
    double sum = 0.0;
    for (size_t r = 0; r < n; ++r) {
      double acc = 0.0;
      for (size_t c = 0; c < n; ++c) acc += a[r][c] * v[c];
      next[r] = acc;
      sum += acc;
    }
    for (size_t r = 0; r < n; ++r) next[r] /= sum;
    std::swap(v, next);
  }
  return v;
}

std::vector<AlphaScanPoint> scan_alpha_thresholds(const Tournament& t,
                                                  const std::vector<Rational>& grid) {
  std::vector<AlphaScanPoint> out;
  out.reserve(grid.size());
  for (const Rational& alpha : grid) {
    AlphaScanPoint point;
    point.alpha = alpha;
    point.ranking = ranking_from_ratings(markov(t, alpha));
    point.change_from_prev = !out.empty() && !(point.ranking == out.back().ranking);
    out.push_back(std::move(point));
  }
  return out;
}

}  // namespace ranklab

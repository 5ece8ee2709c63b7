#include "ranklab/methods.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace ranklab {

const char* method_name(Method m) {
  switch (m) {
    case Method::Borda: return "borda";
    case Method::Massey: return "massey";
    case Method::Colley: return "colley";
    case Method::Markov: return "markov";
  }
  return "?";
}

std::optional<Method> parse_method(const std::string& name) {
  std::string s;
  for (char c : name) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s == "borda") return Method::Borda;
  if (s == "massey") return Method::Massey;
  if (s == "colley") return Method::Colley;
  if (s == "markov") return Method::Markov;
  return std::nullopt;
}

bool label_less(const std::string& a, const std::string& b) {
  // "P2" sorts before "P10": compare the common prefix, then any trailing
  // number numerically, then lexicographically.
  auto split = [](const std::string& s) {
    size_t cut = s.size();
    while (cut > 0 && std::isdigit(static_cast<unsigned char>(s[cut - 1]))) --cut;
    return std::pair<std::string, std::string>(s.substr(0, cut), s.substr(cut));
  };
  auto [pa, na] = split(a);
  auto [pb, nb] = split(b);
  if (pa != pb) return pa < pb;
  if (na.empty() || nb.empty()) return na.size() < nb.size() ? true : a < b;
  if (na.size() != nb.size()) return na.size() < nb.size();
  if (na != nb) return na < nb;
  return a < b;
}

bool Ranking::strict() const {
  return std::all_of(classes.begin(), classes.end(),
                     [](const std::vector<std::string>& c) { return c.size() == 1; });
}

size_t Ranking::player_count() const {
  size_t n = 0;
  for (const auto& c : classes) n += c.size();
  return n;
}

Ranking Ranking::reversed() const {
  Ranking out;
  out.classes.assign(classes.rbegin(), classes.rend());
  return out;
}

Ranking Ranking::without(const std::string& label) const {
  Ranking out;
  for (const auto& c : classes) {
    std::vector<std::string> kept;
    for (const auto& member : c) {
      if (member != label) kept.push_back(member);
    }
    if (!kept.empty()) out.classes.push_back(std::move(kept));
  }
  return out;
}

Ranking ranking_from_ratings(const RatingVector& rv) {
  const size_t n = rv.ratings.size();
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (rv.ratings[a] != rv.ratings[b]) return rv.ratings[a] > rv.ratings[b];
    return label_less(rv.labels[a], rv.labels[b]);
  });
  Ranking out;
  for (size_t pos = 0; pos < n; ++pos) {
    const size_t idx = order[pos];
    if (pos > 0 && rv.ratings[order[pos - 1]] == rv.ratings[idx]) {
      out.classes.back().push_back(rv.labels[idx]);
    } else {
      out.classes.push_back({rv.labels[idx]});
    }
  }
  return out;
}

std::string format_ranking(const Ranking& r) {
  std::ostringstream out;
  for (size_t c = 0; c < r.classes.size(); ++c) {
    if (c) out << " > ";
    for (size_t m = 0; m < r.classes[c].size(); ++m) {
      if (m) out << " = ";
      out << r.classes[c][m];
    }
  }
  return out.str();
}

namespace {

void reject_draws(const Tournament& t, Method m) {
  if (t.has_draw()) {
    throw Error(Errc::DrawNotSupported,
                std::string(method_name(m)) + " needs a winner in every match");
  }
}

void reject_empty(const Tournament& t, Method m) {
  if (t.player_count() == 0) {
    throw Error(Errc::EmptyParameters, std::string(method_name(m)) + " needs a nonempty roster");
  }
}

RatingVector make_rating(const Tournament& t, Method m, RatVec ratings,
                         std::optional<Rational> alpha = std::nullopt) {
  RatingVector rv;
  rv.method = m;
  rv.alpha = std::move(alpha);
  rv.labels = t.roster();
  rv.ratings = std::move(ratings);
  return rv;
}

}  // namespace

MasseySystem build_massey_system(const Tournament& t) {
  reject_empty(t, Method::Massey);
  reject_draws(t, Method::Massey);
  const auto st = stats(t);
  const size_t n = st.size();
  for (size_t i = 0; i < n; ++i) {
    if (st[i].matches_played == 0) {
      throw Error(Errc::IsolatedPlayer, t.label(static_cast<PlayerId>(i + 1)) + " has no matches");
    }
  }
  MasseySystem sys;
  sys.m = zeros(n, n);
  sys.p.assign(n, Rational(0));
  for (size_t i = 0; i < n; ++i) {
    sys.m[i][i] = rat(st[i].matches_played);
    for (const auto& [opp, count] : st[i].matches_vs) {
      sys.m[i][static_cast<size_t>(opp - 1)] = rat(-count);
    }
    sys.p[i] = rat(st[i].points_for - st[i].points_against);
  }
  sys.m_bar = sys.m;
  sys.m_bar[n - 1].assign(n, Rational(1));
  sys.p_bar = sys.p;
  sys.p_bar[n - 1] = 0;
  return sys;
}

ColleySystem build_colley_system(const Tournament& t) {
  reject_empty(t, Method::Colley);
  reject_draws(t, Method::Colley);
  const auto st = stats(t);
  const size_t n = st.size();
  ColleySystem sys;
  sys.c = zeros(n, n);
  sys.b.assign(n, Rational(0));
  for (size_t i = 0; i < n; ++i) {
    sys.c[i][i] = rat(2 + st[i].matches_played);
    for (const auto& [opp, count] : st[i].matches_vs) {
      sys.c[i][static_cast<size_t>(opp - 1)] = rat(-count);
    }
    sys.b[i] = Rational(1) + rat(st[i].wins - st[i].losses, 2);
  }
  return sys;
}

MarkovSystem build_markov_system(const Tournament& t, const Rational& alpha) {
  reject_empty(t, Method::Markov);
  reject_draws(t, Method::Markov);
  if (alpha < 0 || alpha > 1) {
    throw Error(Errc::InvalidAlpha, "alpha must lie in [0,1], got " + fraction_string(alpha));
  }
  const auto st = stats(t);
  const size_t n = st.size();
  MarkovSystem sys;
  sys.alpha = alpha;
  sys.g = zeros(n, n);
  for (size_t i = 0; i < n; ++i) {
    if (st[i].losses == 0) {
      // undefeated (or idle) player: uniform column
      for (size_t j = 0; j < n; ++j) sys.g[j][i] = rat(1, static_cast<long long>(n));
    } else {
      for (const auto& [opp, count] : st[i].losses_vs) {
        sys.g[static_cast<size_t>(opp - 1)][i] = rat(count, st[i].losses);
      }
    }
  }
  const Rational uniform = (Rational(1) - alpha) / Rational(static_cast<long>(n));
  sys.a = zeros(n, n);
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < n; ++c) sys.a[r][c] = alpha * sys.g[r][c] + uniform;
  }
  return sys;
}

RatingVector borda(const Tournament& t) {
  reject_empty(t, Method::Borda);
  reject_draws(t, Method::Borda);
  const auto st = stats(t);
  RatVec r;
  r.reserve(st.size());
  for (const auto& s : st) r.push_back(rat(s.wins));
  return make_rating(t, Method::Borda, std::move(r));
}

RatingVector massey(const Tournament& t) {
  const MasseySystem sys = build_massey_system(t);
  auto solution = solve_unique(sys.m_bar, sys.p_bar);
  if (!solution) {
    throw Error(Errc::SingularSystem,
                "adjusted Massey matrix is singular (is the tournament connected?)");
  }
  return make_rating(t, Method::Massey, std::move(*solution));
}

RatingVector colley(const Tournament& t) {
  const ColleySystem sys = build_colley_system(t);
  auto solution = solve_unique(sys.c, sys.b);
  if (!solution) {
    throw Error(Errc::SingularSystem, "Colley matrix is singular");  // cannot happen: C is PD
  }
  return make_rating(t, Method::Colley, std::move(*solution));
}

RatingVector markov(const Tournament& t, const Rational& alpha) {
  const MarkovSystem sys = build_markov_system(t, alpha);
  const size_t n = sys.a.size();
  // stationary vector: (A - I) r = 0 with the normalization row sum(r) = 1
  RatMatrix rows = zeros(n + 1, n);
  RatVec rhs(n + 1, Rational(0));
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < n; ++c) rows[r][c] = sys.a[r][c] - Rational(r == c ? 1 : 0);
  }
  rows[n].assign(n, Rational(1));
  rhs[n] = 1;
  auto solution = solve_unique(rows, rhs);
  if (!solution) {
    // a stationary vector always exists; non-uniqueness is the only failure,
    // and it requires alpha = 1 with a reducible chain
    throw Error(Errc::NonUniqueStationary,
                "stationary distribution is not unique at alpha = " + fraction_string(alpha));
  }
  return make_rating(t, Method::Markov, std::move(*solution), alpha);
}

RatingVector rate(const Tournament& t, Method m, const std::optional<Rational>& alpha) {
  switch (m) {
    case Method::Borda: return borda(t);
    case Method::Massey: return massey(t);
    case Method::Colley: return colley(t);
    case Method::Markov: return markov(t, alpha.value_or(kDefaultAlpha));
  }
  throw Error(Errc::ParseError, "unknown method");
}

}  // namespace ranklab

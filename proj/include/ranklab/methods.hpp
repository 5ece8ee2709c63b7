#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ranklab/linalg.hpp"
#include "ranklab/tournament.hpp"

namespace ranklab {

enum class Method { Borda, Massey, Colley, Markov };

const char* method_name(Method m);
std::optional<Method> parse_method(const std::string& name);

inline const Rational kDefaultAlpha = rat(17, 20);

// Exact rating per player. `labels` and `ratings` are aligned with the
// tournament roster that produced them.
struct RatingVector {
  Method method = Method::Borda;
  std::optional<Rational> alpha;  // set for Markov
  std::vector<std::string> labels;
  RatVec ratings;
};

// Weak ordering: ordered equivalence classes of labels, best first. Members
// of a class are sorted in natural label order so rankings compare and print
// deterministically regardless of roster input order.
struct Ranking {
  std::vector<std::vector<std::string>> classes;

  bool strict() const;
  size_t player_count() const;
  Ranking reversed() const;                        // classes in reverse order
  Ranking without(const std::string& label) const;  // drop one player
  bool operator==(const Ranking&) const = default;
};

Ranking ranking_from_ratings(const RatingVector& rv);

// "P1 > P3 = P4 > P2"
std::string format_ranking(const Ranking& r);

// Natural label comparison: P2 before P10.
bool label_less(const std::string& a, const std::string& b);

// Massey least-squares system. m is symmetric with zero row sums; m_bar
// replaces the last row with all ones and p_bar zeroes the last entry, which
// pins the solution with sum(r) = 0.
struct MasseySystem {
  RatMatrix m;
  RatVec p;
  RatMatrix m_bar;
  RatVec p_bar;
};

// Colley system C r = b with C = M + 2I and b_i = 1 + (w_i - l_i)/2.
struct ColleySystem {
  RatMatrix c;
  RatVec b;
};

// Markov chain: g is column stochastic (column i spreads player i's losses;
// an undefeated player's column is uniform 1/n), a = alpha*g + (1-alpha)/n * N.
struct MarkovSystem {
  RatMatrix g;
  RatMatrix a;
  Rational alpha;
};

MasseySystem build_massey_system(const Tournament& t);
ColleySystem build_colley_system(const Tournament& t);
MarkovSystem build_markov_system(const Tournament& t, const Rational& alpha);

// Rating of each player is their win count.
RatingVector borda(const Tournament& t);

// Exact solution of the adjusted Massey system; sum of ratings is 0.
// Throws IsolatedPlayer for a player with no matches and SingularSystem when
// the adjusted matrix is not invertible (disconnected tournaments).
RatingVector massey(const Tournament& t);

// Exact solution of C r = b; scores never matter, only wins and losses.
RatingVector colley(const Tournament& t);

// Exact stationary vector of the damped chain, normalized to sum 1.
// alpha = 1 is attempted and NonUniqueStationary is thrown when the
// stationary space has dimension > 1.
RatingVector markov(const Tournament& t, const Rational& alpha);

// Dispatch helper; Markov uses kDefaultAlpha when alpha is absent.
RatingVector rate(const Tournament& t, Method m,
                  const std::optional<Rational>& alpha = std::nullopt);

}  // namespace ranklab

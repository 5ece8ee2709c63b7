#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ranklab/methods.hpp"
#include "ranklab/tournament.hpp"

namespace ranklab {

enum class Verdict { Inversion, Perturbed, Unchanged, NotApplicable };

const char* verdict_name(Verdict v);

// Everything needed to audit an inversion check: both rankings, both rating
// vectors, the deleted player and the classification.
//
//   Inversion      strict before, strict after, after is the exact reverse of
//                  before minus the deleted player
//   Unchanged      after equals before minus the deleted player
//   Perturbed      both strict but neither of the above
//   NotApplicable  before (or after) is not a strict total order
struct ParadoxReport {
  Method method = Method::Borda;
  std::optional<Rational> alpha;
  Ranking before;
  std::optional<std::string> deleted;
  std::optional<Ranking> after;
  Verdict verdict = Verdict::NotApplicable;
  RatingVector before_ratings;
  std::optional<RatingVector> after_ratings;
};

// Ranks t, deletes the unique last-ranked player, re-ranks, classifies.
ParadoxReport inversion_check(const Tournament& t, Method m,
                              const std::optional<Rational>& alpha = std::nullopt);

// perfect(P1 > ... > Pn) + k * condorcet(Pn, ..., P1): the constructive
// witness family behind the impossibility result; k = 2 already inverts
// Borda, Massey and Colley.
Tournament theorem_witness(int n, int k);

// Outcome of one axiom check, with the first counterexample when it fails.
struct PropertyReport {
  std::string property;
  Method method = Method::Borda;
  std::optional<Rational> alpha;
  bool pass = true;
  long long cases_checked = 0;
  std::optional<long long> first_violation;        // trial index or k
  std::optional<std::string> counterexample;       // human-readable
  std::optional<Tournament> counterexample_tournament;
  std::vector<std::pair<long long, bool>> per_case;  // (k or trial, held?)
};

// ranking(perfect(sigma)) == sigma-order, over random permutations
// (exhaustive when n <= 4; the seeded generator is platform-stable).
PropertyReport check_natural(Method m, int n, int trials, uint64_t seed,
                             const std::optional<Rational>& alpha = std::nullopt);

// ranking(t + k*condorcet(c_order)) == ranking(t) for k = 1..k_max.
PropertyReport check_condorcet_reducibility(Method m, const Tournament& t,
                                            const std::vector<PlayerId>& c_order, int k_max,
                                            const std::optional<Rational>& alpha = std::nullopt);

// Smallest k <= k_max with ranking(t1 + k*t2) == ranking(t2), if any.
// Throws NotStrictOrder when ranking(t2) has ties.
std::optional<int> find_long_tournament_k(Method m, const Tournament& t1, const Tournament& t2,
                                          int k_max,
                                          const std::optional<Rational>& alpha = std::nullopt);

// Closed forms for the Z family. The Massey ratings are affine in the player
// index: r_i = alpha + beta*i with beta = -l/(l + k*n), and after deleting Pn
// r'_i = alpha' + beta'*i with beta' = (k - l)/(k + l). The Colley vector
// satisfies 2r - 1 = a*x^i + b*y^i where x, y are the roots of
// (k+l)t^2 - 2(1+k+l)t + (k+l) = 0; those coefficients are kept as doubles
// and verified numerically, the decisive sign tests stay exact.
struct ZClosedForm {
  int n = 0, k = 0, l = 0;
  Rational massey_beta;
  Rational massey_alpha;
  Rational massey_beta_prime;
  Rational massey_alpha_prime;
  double colley_x = 0.0, colley_y = 0.0;          // 0 < x < 1 < y
  double colley_a = 0.0, colley_b = 0.0;          // pre-deletion coefficients
  double colley_a_prime = 0.0, colley_b_prime = 0.0;

  Rational massey_rating(int i) const { return massey_alpha + massey_beta * i; }
  Rational massey_rating_after(int i) const { return massey_alpha_prime + massey_beta_prime * i; }
  double colley_tilde(int i) const;        // a*x^i + b*y^i
  double colley_tilde_after(int i) const;  // a'*x^i + b'*y^i
};

ZClosedForm massey_z_closed_form(int n, int k, int l);
ZClosedForm colley_z_closed_form(int n, int k, int l);

// Massey and Colley invert on z_tournament(n,k,l) exactly when k > l > 0.
bool z_inversion_predicate(int n, int k, int l, Method m);

// Detects a union of t perfect tournaments: every pair meets the same
// number of times and every match is 1-0. Gates the p/(nt) shortcuts.
struct RegularityInfo {
  bool is_union_of_perfect = false;
  long long t = 0;
};

RegularityInfo regularity(const Tournament& t);

// The overdetermined incidence system X r = s: one +1/-1 row per match,
// s holding the score differentials. X^T X equals the Massey matrix and
// X^T s equals p; kept as an independent cross-check of massey().
struct LeastSquaresSystem {
  RatMatrix x;
  RatVec s;
};

LeastSquaresSystem build_incidence_system(const Tournament& t);

// Solves the normal equations built from the raw incidence rows. Must agree
// with massey() exactly; used only for cross-validation.
RatingVector massey_least_squares_oracle(const Tournament& t);

// Floating-point power iteration on the damped chain, alpha < 1 only.
// Within 1e-9 of the exact stationary vector for reasonable iteration counts.
std::vector<double> markov_power_iteration_oracle(const Tournament& t, const Rational& alpha,
                                                  int iterations);

struct AlphaScanPoint {
  Rational alpha;
  Ranking ranking;
  bool change_from_prev = false;
};

// Markov ranking at each grid alpha, flagging consecutive points whose
// rankings differ. Grid values must lie in [0,1]; method errors propagate.
std::vector<AlphaScanPoint> scan_alpha_thresholds(const Tournament& t,
                                                  const std::vector<Rational>& grid);

}  // namespace ranklab

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ranklab/error.hpp"

namespace ranklab {

// Players are identified by their 1-based position in the roster. Labels are
// stable display names ("P1", "Lyon", ...) and survive player deletion, which
// renumbers the surviving indices.
using PlayerId = int;

// One match: player i scored score_i, player j scored score_j. Draws are
// representable here; the ranking methods reject them.
struct Match {
  PlayerId i = 0;
  PlayerId j = 0;
  long long score_i = 0;
  long long score_j = 0;

  bool draw() const { return score_i == score_j; }
  PlayerId winner() const { return score_i > score_j ? i : j; }
  PlayerId loser() const { return score_i > score_j ? j : i; }

  // (i,j,si,sj) and (j,i,sj,si) describe the same result; the canonical form
  // puts the lower index first so multiset comparison is order-insensitive.
  Match canonical() const {
    return i <= j ? *this : Match{j, i, score_j, score_i};
  }

  friend auto operator<=>(const Match&, const Match&) = default;
};

// A roster plus a finite multiset of matches. The roster is explicit so a
// player with zero matches is representable. Immutable in practice: every
// operation below returns a new value.
class Tournament {
 public:
  Tournament() = default;
  explicit Tournament(std::vector<std::string> roster);

  // Roster P1..Pn.
  static Tournament with_default_roster(int n);

  void add_match(PlayerId i, PlayerId j, long long score_i, long long score_j);
  void add_match(const Match& m) { add_match(m.i, m.j, m.score_i, m.score_j); }

  int player_count() const { return static_cast<int>(roster_.size()); }
  const std::vector<std::string>& roster() const { return roster_; }
  const std::string& label(PlayerId id) const { return roster_.at(static_cast<size_t>(id - 1)); }
  PlayerId id_of(const std::string& label) const;  // throws UnknownPlayer
  const std::vector<Match>& matches() const { return matches_; }
  size_t match_count() const { return matches_.size(); }
  bool has_draw() const;

  // Sorted canonical multiset; two tournaments are equal iff rosters and
  // canonical match lists coincide.
  std::vector<Match> canonical_matches() const;
  bool operator==(const Tournament& other) const;

 private:
  std::vector<std::string> roster_;
  std::vector<Match> matches_;
};

// Per-player aggregates used by all four methods.
struct PlayerStats {
  long long wins = 0;
  long long losses = 0;
  long long draws = 0;
  long long points_for = 0;
  long long points_against = 0;
  long long matches_played = 0;
  std::map<PlayerId, long long> matches_vs;  // opponent -> meetings
  std::map<PlayerId, long long> losses_vs;   // opponent -> losses against them
};

// Exact aggregates, indexed so that result[id - 1] belongs to player id.
std::vector<PlayerStats> stats(const Tournament& t);

// Multiset sum of two tournaments over the same roster.
Tournament tournament_union(const Tournament& a, const Tournament& b);

// k-fold multiset sum, k >= 1.
Tournament repeat(int k, const Tournament& t);

// Round robin with no upsets: order[a] beats order[b] 1-0 whenever a < b.
// `order` must be a permutation of 1..n; the roster is P1..Pn.
Tournament perfect(const std::vector<PlayerId>& order);

// Union of the n cyclic rotations of perfect(order). Every player finishes
// with n(n-1)/2 wins and as many losses.
Tournament condorcet(const std::vector<PlayerId>& order);

// Directed winning cycle on n >= 3 players: P(i+1) beats P(i), P1 beats Pn.
Tournament ring_plus(int n);

// Losing chain: Pi beats P(i+1) along the path, n >= 2.
Tournament chain_minus(int n);

// Winning chain: P(i+1) beats Pi along the path, n >= 2.
Tournament chain_plus(int n);

// k copies of ring_plus(n) plus l copies of chain_minus(n); (k,l) != (0,0).
Tournament z_tournament(int n, int k, int l);

// Removes one player and every match they appear in; surviving players are
// renumbered 1..n-1 in roster order, labels unchanged.
Tournament delete_player(const Tournament& t, PlayerId p);

}  // namespace ranklab

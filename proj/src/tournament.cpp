#include "ranklab/tournament.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace ranklab {

namespace {

std::string ordinal_label(int index) {
  return "P" + std::to_string(index);
}

void require_permutation(const std::vector<PlayerId>& order) {
  const int n = static_cast<int>(order.size());
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (PlayerId p : order) {
    if (p < 1 || p > n || seen[static_cast<size_t>(p)]) {
      throw Error(Errc::InvalidPermutation, "order must be a permutation of 1.." + std::to_string(n));
    }
    seen[static_cast<size_t>(p)] = true;
  }
}

}  // namespace

Tournament::Tournament(std::vector<std::string> roster) : roster_(std::move(roster)) {
  std::set<std::string> unique(roster_.begin(), roster_.end());
  if (unique.size() != roster_.size()) {
    throw Error(Errc::ParseError, "duplicate player label in roster");
  }
}

Tournament Tournament::with_default_roster(int n) {
  std::vector<std::string> roster;
  roster.reserve(static_cast<size_t>(std::max(n, 0)));
  for (int i = 1; i <= n; ++i) roster.push_back(ordinal_label(i));
  return Tournament(std::move(roster));
}

void Tournament::add_match(PlayerId i, PlayerId j, long long score_i, long long score_j) {
  const int n = player_count();
  if (i < 1 || i > n || j < 1 || j > n) {
    throw Error(Errc::UnknownPlayer, "match references player outside roster");
  }
  if (i == j) {
    throw Error(Errc::ParseError, "a player cannot play against themselves");
  }
  if (score_i < 0 || score_j < 0) {
    throw Error(Errc::ParseError, "scores must be nonnegative");
  }
  matches_.push_back(Match{i, j, score_i, score_j});
}

PlayerId Tournament::id_of(const std::string& label) const {
  for (size_t idx = 0; idx < roster_.size(); ++idx) {
    if (roster_[idx] == label) return static_cast<PlayerId>(idx + 1);
  }
  throw Error(Errc::UnknownPlayer, "no player named '" + label + "'");
}

bool Tournament::has_draw() const {
  return std::any_of(matches_.begin(), matches_.end(), [](const Match& m) { return m.draw(); });
}

std::vector<Match> Tournament::canonical_matches() const {
  std::vector<Match> out;
  out.reserve(matches_.size());
  for (const Match& m : matches_) out.push_back(m.canonical());
  std::sort(out.begin(), out.end());
  return out;
}

bool Tournament::operator==(const Tournament& other) const {
  return roster_ == other.roster_ && canonical_matches() == other.canonical_matches();
}

std::vector<PlayerStats> stats(const Tournament& t) {
  std::vector<PlayerStats> out(static_cast<size_t>(t.player_count()));
  for (const Match& m : t.matches()) {
    PlayerStats& si = out[static_cast<size_t>(m.i - 1)];
    PlayerStats& sj = out[static_cast<size_t>(m.j - 1)];
    si.points_for += m.score_i;
    si.points_against += m.score_j;
    sj.points_for += m.score_j;
    sj.points_against += m.score_i;
    si.matches_played += 1;
    sj.matches_played += 1;
    si.matches_vs[m.j] += 1;
    sj.matches_vs[m.i] += 1;
    if (m.draw()) {
      si.draws += 1;
      sj.draws += 1;
    } else {
      PlayerStats& win = m.score_i > m.score_j ? si : sj;
      PlayerStats& los = m.score_i > m.score_j ? sj : si;
      win.wins += 1;
      los.losses += 1;
      los.losses_vs[m.winner()] += 1;
    }
  }
  return out;
}

Tournament tournament_union(const Tournament& a, const Tournament& b) {
  if (a.roster() != b.roster()) {
    throw Error(Errc::RosterMismatch, "union requires identical rosters");
  }
  Tournament out(a.roster());
  for (const Match& m : a.matches()) out.add_match(m);
  for (const Match& m : b.matches()) out.add_match(m);
  return out;
}

Tournament repeat(int k, const Tournament& t) {
  if (k < 1) {
    throw Error(Errc::EmptyParameters, "repeat count must be >= 1");
  }
  Tournament out(t.roster());
  for (int c = 0; c < k; ++c) {
    for (const Match& m : t.matches()) out.add_match(m);
  }
  return out;
}

Tournament perfect(const std::vector<PlayerId>& order) {
  require_permutation(order);
  const int n = static_cast<int>(order.size());
  Tournament out = Tournament::with_default_roster(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      out.add_match(order[static_cast<size_t>(a)], order[static_cast<size_t>(b)], 1, 0);
    }
  }
  return out;
}

Tournament condorcet(const std::vector<PlayerId>& order) {
  require_permutation(order);
  const int n = static_cast<int>(order.size());
  Tournament out = Tournament::with_default_roster(n);
  for (int rot = 0; rot < n; ++rot) {
    std::vector<PlayerId> rotated;
    rotated.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) rotated.push_back(order[static_cast<size_t>((i + rot) % n)]);
    const Tournament block = perfect(rotated);
    for (const Match& m : block.matches()) out.add_match(m);
  }
  return out;
}

Tournament ring_plus(int n) {
  if (n < 3) {
    throw Error(Errc::TooFewPlayers, "winning cycle needs at least 3 players");
  }
  Tournament out = Tournament::with_default_roster(n);
  for (int i = 1; i < n; ++i) out.add_match(i, i + 1, 0, 1);
  out.add_match(n, 1, 0, 1);
  return out;
}

Tournament chain_minus(int n) {
  if (n < 2) {
    throw Error(Errc::TooFewPlayers, "chain needs at least 2 players");
  }
  Tournament out = Tournament::with_default_roster(n);
  for (int i = 1; i < n; ++i) out.add_match(i, i + 1, 1, 0);
  return out;
}

Tournament chain_plus(int n) {
  if (n < 2) {
    throw Error(Errc::TooFewPlayers, "chain needs at least 2 players");
  }
  Tournament out = Tournament::with_default_roster(n);
  for (int i = 1; i < n; ++i) out.add_match(i, i + 1, 0, 1);
  return out;
}

Tournament z_tournament(int n, int k, int l) {
  if (n < 3) {
    throw Error(Errc::TooFewPlayers, "Z tournament needs at least 3 players");
  }
  if (k < 0 || l < 0 || (k == 0 && l == 0)) {
    throw Error(Errc::EmptyParameters, "Z tournament needs k >= 0, l >= 0 and (k,l) != (0,0)");
  }
  Tournament out = Tournament::with_default_roster(n);
  if (k > 0) {
    const Tournament cycles = repeat(k, ring_plus(n));
    for (const Match& m : cycles.matches()) out.add_match(m);
  }
  if (l > 0) {
    const Tournament chains = repeat(l, chain_minus(n));
    for (const Match& m : chains.matches()) out.add_match(m);
  }
  return out;
}

Tournament delete_player(const Tournament& t, PlayerId p) {
  const int n = t.player_count();
  if (p < 1 || p > n) {
    throw Error(Errc::UnknownPlayer, "cannot delete player " + std::to_string(p));
  }
  std::vector<std::string> roster;
  std::vector<PlayerId> remap(static_cast<size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    if (i == p) continue;
    roster.push_back(t.label(i));
    remap[static_cast<size_t>(i)] = static_cast<PlayerId>(roster.size());
  }
  Tournament out(std::move(roster));
  for (const Match& m : t.matches()) {
    if (m.i == p || m.j == p) continue;
    out.add_match(remap[static_cast<size_t>(m.i)], remap[static_cast<size_t>(m.j)], m.score_i,
                  m.score_j);
  }
  return out;
}

}  // namespace ranklab

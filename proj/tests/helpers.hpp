#pragma once

// Shared fixtures and generators for the test binaries.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ranklab/methods.hpp"
#include "ranklab/paradox.hpp"
#include "ranklab/tournament.hpp"

namespace testutil {

inline ranklab::Rational q(const std::string& text) {
  auto v = ranklab::parse_rational(text);
  if (!v) throw std::runtime_error("bad rational literal: " + text);
  return *v;
}

inline ranklab::RatVec qvec(const std::vector<std::string>& fractions) {
  ranklab::RatVec out;
  out.reserve(fractions.size());
  for (const auto& f : fractions) out.push_back(q(f));
  return out;
}

// Strict ranking literal: order of labels, best first.
inline ranklab::Ranking strict(const std::vector<std::string>& labels) {
  ranklab::Ranking r;
  for (const auto& l : labels) r.classes.push_back({l});
  return r;
}

// The running 4-player example: pairwise win counts
//   P1 over (P2,P3,P4) = (1,1,5), P2 over (P1,P3,P4) = (1,1,2),
//   P3 over (P1,P2,P4) = (2,2,1), P4 over (P1,P2,P3) = (2,2,2),
// every match 1-0.
inline ranklab::Tournament b_example() {
  const int wins[4][4] = {
      {0, 1, 1, 5},
      {1, 0, 1, 2},
      {2, 2, 0, 1},
      {2, 2, 2, 0},
  };
  auto t = ranklab::Tournament::with_default_roster(4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      for (int c = 0; c < wins[i][j]; ++c) t.add_match(i + 1, j + 1, 1, 0);
    }
  }
  return t;
}

// Round robin on 5 players where the lower index always wins 3-0.
inline ranklab::Tournament lopsided_round_robin5() {
  auto t = ranklab::Tournament::with_default_roster(5);
  for (int i = 1; i <= 5; ++i) {
    for (int j = i + 1; j <= 5; ++j) t.add_match(i, j, 3, 0);
  }
  return t;
}

// Path P1 -> P3 -> P2 -> P4 of single wins (the three-match example that a
// winning cycle is able to reshuffle).
inline ranklab::Tournament y_example() {
  auto t = ranklab::Tournament::with_default_roster(4);
  t.add_match(1, 3, 1, 0);
  t.add_match(3, 2, 1, 0);
  t.add_match(2, 4, 1, 0);
  return t;
}

inline std::vector<ranklab::PlayerId> iota_order(int n) {
  std::vector<ranklab::PlayerId> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;
  return v;
}

inline std::vector<ranklab::PlayerId> reverse_order(int n) {
  std::vector<ranklab::PlayerId> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = n - i;
  return v;
}

inline size_t pick(std::mt19937_64& rng, size_t bound) {
  return static_cast<size_t>(rng() % bound);
}

inline void shuffle_ids(std::vector<ranklab::PlayerId>& v, std::mt19937_64& rng) {
  for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[pick(rng, i)]);
}

// Connected decisive tournament: spanning tree first, then extra matches.
// Scores stay small; winner direction and scores are random.
inline ranklab::Tournament random_connected(std::mt19937_64& rng, int n, int max_matches,
                                            long long max_score = 3) {
  auto t = ranklab::Tournament::with_default_roster(n);
  auto add_random = [&](int a, int b) {
    long long ws = 1 + static_cast<long long>(pick(rng, static_cast<size_t>(max_score)));
    long long ls = pick(rng, static_cast<size_t>(ws));  // strictly below ws
    if (pick(rng, 2) == 0) {
      t.add_match(a, b, ws, ls);
    } else {
      t.add_match(b, a, ls, ws);
    }
  };
  for (int i = 2; i <= n; ++i) add_random(i, 1 + static_cast<int>(pick(rng, static_cast<size_t>(i - 1))));
  if (n >= 2 && max_matches > n - 1) {
    const int extra = static_cast<int>(pick(rng, static_cast<size_t>(max_matches - (n - 1) + 1)));
    for (int e = 0; e < extra; ++e) {
      int a = 1 + static_cast<int>(pick(rng, static_cast<size_t>(n)));
      int b = 1 + static_cast<int>(pick(rng, static_cast<size_t>(n - 1)));
      if (b >= a) ++b;
      add_random(a, b);
    }
  }
  return t;
}

// Arbitrary tournament (possibly disconnected, possibly with draws) for the
// structural-identity properties.
inline ranklab::Tournament random_any(std::mt19937_64& rng, int n, int max_matches,
                                      bool allow_draws = false) {
  auto t = ranklab::Tournament::with_default_roster(n);
  const int count = static_cast<int>(pick(rng, static_cast<size_t>(max_matches + 1)));
  for (int e = 0; e < count; ++e) {
    int a = 1 + static_cast<int>(pick(rng, static_cast<size_t>(n)));
    int b = 1 + static_cast<int>(pick(rng, static_cast<size_t>(n - 1)));
    if (b >= a) ++b;
    long long sa = static_cast<long long>(pick(rng, 4));
    long long sb = static_cast<long long>(pick(rng, 4));
    if (!allow_draws && sa == sb) sa += 1;
    t.add_match(a, b, sa, sb);
  }
  return t;
}

}  // namespace testutil

#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "ranklab/methods.hpp"
#include "ranklab/paradox.hpp"
#include "ranklab/tournament.hpp"

namespace ranklab {

// CSV, one match per line: player_i,player_j,score_i,score_j
// An optional "#players: P1,P2,..." header pins the roster and its order;
// without it, names are interned in first-appearance order.
Tournament read_tournament_csv(std::istream& in);
void write_tournament_csv(const Tournament& t, std::ostream& out);

// {"roster":["P1",...],"matches":[[i,j,si,sj],...]} with 1-based indices.
Tournament tournament_from_json(const nlohmann::json& j);
nlohmann::json tournament_to_json(const Tournament& t);

// Dispatches on the ".json" extension, CSV otherwise.
Tournament load_tournament_file(const std::string& path);
void save_tournament_file(const Tournament& t, const std::string& path);

// {"method":"massey","ratings":{"P1":"4/55",...},"ranking":[["P1"],...]}
// Rationals are "num/den" strings so nothing is lost to floating point.
nlohmann::json rating_to_json(const RatingVector& rv);
nlohmann::json ranking_to_json(const Ranking& r);
nlohmann::json paradox_report_to_json(const ParadoxReport& report);
nlohmann::json property_report_to_json(const PropertyReport& report);

}  // namespace ranklab

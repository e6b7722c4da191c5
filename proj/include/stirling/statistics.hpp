#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "stirling/core_objects.hpp"

namespace stirling {

enum class StatId {
  asc, des, plat, ap, pd, lap, rpd, ud, eud, dasc, dplat, ddes, pasc, apd, uu, dd
};

enum class SetStatId { Asc, Plat, Des, Lap, Rpd, Eud, Dasc, Dplat, Ddes, Pasc, Apd, Uu, Dd };

enum class JStatKind { plateau, ascent, descent };

struct JStatQuery {
  int j = 1;
  JStatKind kind = JStatKind::plateau;
};

struct StatInfo {
  StatId id;
  std::string_view name;
  BoundaryConvention boundary;
};

struct SetStatInfo {
  SetStatId id;
  std::string_view name;
};

/// Boundary table. asc/des/plat and every set-derived count see both zeros;
/// ap/pd see neither; lap only the left one; rpd only the right one; ud the
/// left one (its second copy must still have a real right neighbour).
inline constexpr std::array<StatInfo, 16> kStatTable{{
    {StatId::asc, "asc", {true, true}},
    {StatId::des, "des", {true, true}},
    {StatId::plat, "plat", {true, true}},
    {StatId::ap, "ap", {false, false}},
    {StatId::pd, "pd", {false, false}},
    {StatId::lap, "lap", {true, false}},
    {StatId::rpd, "rpd", {false, true}},
    {StatId::ud, "ud", {true, false}},
    {StatId::eud, "eud", {true, true}},
    {StatId::dasc, "dasc", {true, true}},
    {StatId::dplat, "dplat", {true, true}},
    {StatId::ddes, "ddes", {true, true}},
    {StatId::pasc, "pasc", {true, true}},
    {StatId::apd, "apd", {true, true}},
    {StatId::uu, "uu", {true, true}},
    {StatId::dd, "dd", {true, true}},
}};

inline constexpr std::array<SetStatInfo, 13> kSetStatTable{{
    {SetStatId::Asc, "Asc"},
    {SetStatId::Plat, "Plat"},
    {SetStatId::Des, "Des"},
    {SetStatId::Lap, "Lap"},
    {SetStatId::Rpd, "Rpd"},
    {SetStatId::Eud, "Eud"},
    {SetStatId::Dasc, "Dasc"},
    {SetStatId::Dplat, "Dplat"},
    {SetStatId::Ddes, "Ddes"},
    {SetStatId::Pasc, "Pasc"},
    {SetStatId::Apd, "Apd"},
    {SetStatId::Uu, "Uu"},
    {SetStatId::Dd, "Dd"},
}};

BoundaryConvention boundary_of(StatId id);
std::string_view name_of(StatId id);
std::string_view name_of(SetStatId id);

/// Throws InvalidObject for an unknown name.
StatId stat_from_name(std::string_view name);
SetStatId set_stat_from_name(std::string_view name);

/// Sorted letter values.
using LetterSet = std::vector<int>;

/// Count of positions matching the statistic under its boundary convention.
int scalar_stat(std::span<const int> word, StatId id);
inline int scalar_stat(const StirlingPermutation& s, StatId id) { return scalar_stat(s.word(), id); }

/// Letter values at which the pattern occurs; both zeros are in force.
LetterSet set_stat(std::span<const int> word, SetStatId id);
inline LetterSet set_stat(const StirlingPermutation& s, SetStatId id) { return set_stat(s.word(), id); }

/// j-plateaux / j-ascents / j-descents of a k-Stirling word, zeros at both
/// ends. Index 0 (the left zero) counts as a 1-ascent. Throws
/// std::out_of_range unless 1 <= j <= k.
int j_stat(std::span<const int> word, int k, JStatQuery query);

/// #{i in 0..n-1 : pi(i) > pi(i+1)} with pi(0) = 0.
int des_type_b(std::span<const int> signed_perm);

}  // namespace stirling

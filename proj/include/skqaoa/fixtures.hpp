#pragma once

// Published optimal (p <= 8) and extrapolated (9 <= p <= 12) QAOA angles for
// the infinite-size SK model, stored with beta already in circuit sign
// convention (the tables list -beta).

#include <optional>
#include <string_view>
#include <vector>

#include "skqaoa/params.hpp"

namespace skqaoa {

struct FixtureRow {
  int p = 0;
  double value = 0.0;  // tabulated V_p, 4 decimals
  QaoaParams params;
};

/// Rows for p = 1..8.
const std::vector<FixtureRow>& table1();

/// Rows for p = 9..12.
const std::vector<FixtureRow>& table2();

/// Looks up a row by table name ("table1" or "table2") and depth.
std::optional<FixtureRow> find_fixture(std::string_view table, int p);

/// Row for depth p from whichever table holds it.
std::optional<FixtureRow> find_fixture(int p);

inline constexpr double kParisiValue = -0.763166;
inline constexpr double kTwoOverPi = 0.63661977236758134;

}  // namespace skqaoa

#include "skqaoa/fixtures.hpp"

namespace skqaoa {
namespace {

// Entries are transcribed verbatim; the second list is the tabulated -beta.
FixtureRow row(int p, double value, std::vector<double> gamma, std::vector<double> minus_beta) {
  FixtureRow r;
  r.p = p;
  r.value = value;
  r.params.gamma = std::move(gamma);
  for (double b : minus_beta) r.params.beta.push_back(-b);
  return r;
}

}  // namespace

const std::vector<FixtureRow>& table1() {
  // Optimized angles. The p=1 row is the exact optimum gamma = 1/2, beta = -pi/8.
  static const std::vector<FixtureRow> rows = {
      row(1, -0.3033, {0.5}, {0.39269908169872414}),
      row(2, -0.4075, {0.3817, 0.6655}, {0.4960, 0.2690}),
      row(3, -0.4726, {0.3297, 0.5688, 0.6406}, {0.5500, 0.3675, 0.2109}),
      row(4, -0.5157, {0.2949, 0.5144, 0.5586, 0.6429}, {0.5710, 0.4176, 0.3028, 0.1729}),
      row(5, -0.5476, {0.2705, 0.4803, 0.5074, 0.5646, 0.6397}, {0.5899, 0.4492, 0.3559, 0.2643, 0.1486}),
      row(6, -0.5721, {0.2528, 0.4531, 0.4750, 0.5146, 0.5650, 0.6392},
          {0.6004, 0.4670, 0.3880, 0.3176, 0.2325, 0.1291}),
      row(7, -0.5915, {0.2383, 0.4327, 0.4516, 0.4830, 0.5147, 0.5686, 0.6393},
          {0.6085, 0.4810, 0.4090, 0.3535, 0.2857, 0.2080, 0.1146}),
      row(8, -0.6073, {0.2268, 0.4163, 0.4333, 0.4608, 0.4816, 0.5180, 0.5719, 0.6396},
          {0.6152, 0.4906, 0.4244, 0.3779, 0.3223, 0.2606, 0.1884, 0.1030}),
  };
  return rows;
}

const std::vector<FixtureRow>& table2() {
  // Angles guessed by extrapolating the p <= 8 pattern, not optimized.
  static const std::vector<FixtureRow> rows = {
      row(9, -0.6199, {0.2166, 0.4051, 0.4208, 0.4455, 0.4641, 0.4944, 0.5309, 0.5801, 0.6396},
          {0.6226, 0.4994, 0.4410, 0.3888, 0.3527, 0.3031, 0.2462, 0.1769, 0.0951}),
      row(10, -0.6308, {0.2081, 0.3938, 0.4087, 0.4315, 0.4473, 0.4742, 0.5015, 0.5385, 0.5850, 0.6396},
          {0.6275, 0.5059, 0.4454, 0.4089, 0.3676, 0.3344, 0.2866, 0.2321, 0.1652, 0.0878}),
      row(11, -0.6393, {0.2007, 0.3840, 0.3983, 0.4197, 0.4336, 0.4583, 0.4811, 0.5096, 0.5458, 0.5895, 0.6396},
          {0.6317, 0.5111, 0.4525, 0.4192, 0.3824, 0.3444, 0.3197, 0.2730, 0.2203, 0.1553, 0.0815}),
      row(12, -0.6466,
          {0.1941, 0.3753, 0.3892, 0.4096, 0.4221, 0.4452, 0.4654, 0.4889, 0.5175, 0.5524, 0.5934, 0.6396},
          {0.6353, 0.5155, 0.4583, 0.4274, 0.3940, 0.3600, 0.3305, 0.3076, 0.2615, 0.2102, 0.1468, 0.0762}),
  };
  return rows;
}

std::optional<FixtureRow> find_fixture(std::string_view table, int p) {
  const std::vector<FixtureRow>* rows = nullptr;
  if (table == "table1") rows = &table1();
  if (table == "table2") rows = &table2();
  if (!rows) return std::nullopt;
  for (const auto& r : *rows)
    if (r.p == p) return r;
  return std::nullopt;
}

std::optional<FixtureRow> find_fixture(int p) {
  if (auto r = find_fixture("table1", p)) return r;
  return find_fixture("table2", p);
}

}  // namespace skqaoa

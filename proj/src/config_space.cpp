#include "skqaoa/config_space.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "skqaoa/error.hpp"

namespace skqaoa {

void check_depth(int p) {
  require(p >= kMinDepth && p <= kMaxDepth,
          "depth p=" + std::to_string(p) + " outside supported range [1, 12]");
}

namespace {

int bit_of_index(int index, int p) {
  require(index != 0 && index >= -p && index <= p, "spin index out of range");
  return index > 0 ? index - 1 : 2 * p + index;
}

ConfigCode reverse_bits(ConfigCode x, int bits) {
  ConfigCode r = 0;
  for (int k = 0; k < bits; ++k) r |= ((x >> k) & 1u) << (bits - 1 - k);
  return r;
}

void check_config(Configuration a) {
  check_depth(a.p);
  require(a.code < (ConfigCode{1} << (2 * a.p)), "configuration code exceeds 2p bits");
}

}  // namespace

int Configuration::spin(int index) const { return ((code >> bit_of_index(index, p)) & 1u) ? -1 : 1; }

Configuration from_spins(std::span<const int> spins) {
  require(spins.size() % 2 == 0 && !spins.empty(), "spin list must have even, nonzero length");
  const int p = static_cast<int>(spins.size() / 2);
  check_depth(p);
  ConfigCode code = 0;
  for (std::size_t k = 0; k < spins.size(); ++k) {
    require(spins[k] == 1 || spins[k] == -1, "spins must be +1 or -1");
    if (spins[k] == -1) code |= ConfigCode{1} << k;
  }
  return {code, p};
}

std::vector<int> to_spins(Configuration a) {
  std::vector<int> out(2 * a.p);
  for (int k = 0; k < 2 * a.p; ++k) out[k] = ((a.code >> k) & 1u) ? -1 : 1;
  return out;
}

std::vector<Configuration> enumerate_configs(int p) {
  check_depth(p);
  const ConfigCode count = ConfigCode{1} << (2 * p);
  std::vector<Configuration> out;
  out.reserve(count);
  for (ConfigCode c = 0; c < count; ++c) out.push_back({c, p});
  return out;
}

Configuration product(Configuration a, Configuration b) {
  require(a.p == b.p, "product of configurations with different depths");
  return {a.code ^ b.code, a.p};
}

namespace code_ops {

int level(ConfigCode code, int p) {
  // a_{p-k+1} sits at bit p-k, its mirror a_{-(p-k+1)} at bit p+k-1.
  const ConfigCode pos = code & mask(p);
  const ConfigCode neg_mirrored = reverse_bits(code >> p, p);
  const ConfigCode diff = pos ^ neg_mirrored;
  if (diff == 0) return p + 1;
  return p - (std::bit_width(diff) - 1);
}

ConfigCode star(ConfigCode code, int p) {
  const ConfigCode m = mask(p);
  // Positive half: bit r-1 becomes XOR of bits r-1..p-1 (suffix XOR).
  ConfigCode pos = code & m;
  for (int s = 1; s < p; s <<= 1) pos ^= pos >> s;
  // Negative half: a_{-r} at local bit p-r, product runs toward local bit 0.
  ConfigCode neg = code >> p;
  for (int s = 1; s < p; s <<= 1) neg ^= (neg << s) & m;
  return pos | (neg << p);
}

ConfigCode bar(ConfigCode code, int p, int level) {
  const int r = p - level + 1;
  return code ^ (ConfigCode{1} << (r - 1)) ^ (ConfigCode{1} << (2 * p - r));
}

}  // namespace code_ops

int partition_level(Configuration a) {
  check_config(a);
  return code_ops::level(a.code, a.p);
}

Configuration star(Configuration a) {
  check_config(a);
  return {code_ops::star(a.code, a.p), a.p};
}

Configuration bar(Configuration a) {
  check_config(a);
  const int l = code_ops::level(a.code, a.p);
  require(l <= a.p, "bar is undefined on the mirror-symmetric level A_{p+1}");
  return {code_ops::bar(a.code, a.p, l), a.p};
}

LevelPartition partition_levels(int p) {
  check_depth(p);
  LevelPartition out;
  out.p = p;
  const ConfigCode count = ConfigCode{1} << (2 * p);
  out.level_of.resize(count);
  out.sizes.assign(p + 1, 0);
  for (ConfigCode c = 0; c < count; ++c) {
    const int l = code_ops::level(c, p);
    out.level_of[c] = static_cast<std::uint8_t>(l);
    ++out.sizes[l - 1];
  }
  return out;
}

std::size_t ordered_d_size(int p) {
  return ((std::size_t{1} << (2 * p)) - (std::size_t{1} << p)) / 2;
}

OrderedD build_ordered_d(int p) {
  check_depth(p);
  OrderedD d;
  d.p = p;
  const ConfigCode count = ConfigCode{1} << (2 * p);
  d.index_of.assign(count, -1);
  d.members.reserve(ordered_d_size(p));

  // Bucket by level so the result is level-major and code-ascending within a level.
  std::vector<std::vector<ConfigCode>> by_level(p);
  for (ConfigCode c = 0; c < count; ++c) {
    if (!code_ops::even_positive_parity(c, p)) continue;
    const int l = code_ops::level(c, p);
    if (l <= p) by_level[l - 1].push_back(c);
  }
  for (auto& bucket : by_level) d.members.insert(d.members.end(), bucket.begin(), bucket.end());
  for (std::size_t i = 0; i < d.members.size(); ++i) d.index_of[d.members[i]] = static_cast<std::int32_t>(i);
  return d;
}

}  // namespace skqaoa

#pragma once

// Configuration set A = {+1,-1}^{2p} used to index the infinite-size sums.
//
// A configuration is stored as a 2p-bit word. Bit k (0 <= k < p) holds a_{k+1},
// bit p+k holds a_{-p+k}; a spin of +1 is a 0 bit and -1 is a 1 bit. With this
// layout a bitwise product of configurations is an XOR of their codes, and the
// star transform is a running XOR over each half.

#include <cstdint>
#include <span>
#include <vector>

namespace skqaoa {

using ConfigCode = std::uint32_t;

inline constexpr int kMinDepth = 1;
inline constexpr int kMaxDepth = 12;

/// Throws Error(invalid_argument) unless kMinDepth <= p <= kMaxDepth.
void check_depth(int p);

struct Configuration {
  ConfigCode code = 0;
  int p = 1;

  /// Spin a_index for index in {1..p} or {-p..-1}; returns +1 or -1.
  int spin(int index) const;

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

/// Builds a configuration from spins listed as (a_1..a_p, a_{-p}..a_{-1}).
Configuration from_spins(std::span<const int> spins);

/// Spins in the same order as from_spins accepts.
std::vector<int> to_spins(Configuration a);

std::vector<Configuration> enumerate_configs(int p);

/// Bitwise product ab.
Configuration product(Configuration a, Configuration b);

/// Level l such that a lies in A_l; p+1 when a is mirror symmetric.
int partition_level(Configuration a);

/// Suffix products a*_r = a_r...a_p and a*_{-r} = a_{-r}...a_{-p}.
Configuration star(Configuration a);

/// Flips a_{±r} at r = p - level + 1. Throws for a in A_{p+1}.
Configuration bar(Configuration a);

// Raw code helpers used by the evaluator's hot loops. No validation.
namespace code_ops {
inline ConfigCode mask(int bits) { return bits >= 32 ? ~ConfigCode{0} : ((ConfigCode{1} << bits) - 1); }
int level(ConfigCode code, int p);
ConfigCode star(ConfigCode code, int p);
ConfigCode bar(ConfigCode code, int p, int level);
inline bool even_positive_parity(ConfigCode code, int p) {
  return (__builtin_popcount(code & mask(p)) & 1) == 0;
}
}  // namespace code_ops

struct LevelPartition {
  int p = 1;
  std::vector<std::uint8_t> level_of;  // indexed by code
  std::vector<std::size_t> sizes;      // sizes[l-1] = |A_l|, l = 1..p+1
};

LevelPartition partition_levels(int p);

/// One representative per {b, bar(b)} pair of B = A \ A_{p+1}, chosen with even
/// parity on the first p spins and ordered by level then code. Member i plays
/// well with member j whenever i <= j.
struct OrderedD {
  int p = 1;
  std::vector<ConfigCode> members;
  std::vector<std::int32_t> index_of;  // code -> index in members, -1 if absent

  std::size_t size() const { return members.size(); }
};

OrderedD build_ordered_d(int p);

/// (4^p - 2^p) / 2
std::size_t ordered_d_size(int p);

}  // namespace skqaoa

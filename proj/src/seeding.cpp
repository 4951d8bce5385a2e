#include "skqaoa/seeding.hpp"

namespace skqaoa {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Seed derive_seed(Seed master, SeedStream stream, std::uint64_t index) {
  const std::uint64_t tag = static_cast<std::uint64_t>(stream) * 0xd1b54a32d192ed03ULL;
  return splitmix64(splitmix64(master ^ tag) + index);
}

}  // namespace skqaoa

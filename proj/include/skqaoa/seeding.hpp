#pragma once

// Every random stream is derived from one master seed. Sub-seeds are
//   derive_seed(master, stream, index) = splitmix64(splitmix64(master ^ tag(stream)) + index)
// so that instance k of an ensemble, or restart k of an optimizer run, gets the
// same generator regardless of thread count or evaluation order.

#include <cstdint>
#include <random>

namespace skqaoa {

using Seed = std::uint64_t;

enum class SeedStream : std::uint64_t {
  instance = 1,
  restart = 2,
  anneal = 3,
  descent = 4,
  spectral = 5,
};

std::uint64_t splitmix64(std::uint64_t x);

Seed derive_seed(Seed master, SeedStream stream, std::uint64_t index);

using Rng = std::mt19937_64;

inline Rng make_rng(Seed seed) { return Rng(seed); }

}  // namespace skqaoa

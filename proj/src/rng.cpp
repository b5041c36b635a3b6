#include "hrw/rng.hpp"

namespace hrw {

std::uint64_t shard_seed(std::uint64_t master, std::uint64_t shard) {
  // splitmix64 finalizer over master xor an odd multiple of the shard index.
  std::uint64_t z = master ^ (shard * 0x9E3779B97F4A7C15ULL + 0xD1B54A32D192ED03ULL);
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace hrw

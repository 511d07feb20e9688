#pragma once

#include <cstdint>
#include <vector>

#include "mpcstats/engine.hpp"

namespace mpcstats::testing {

inline EngineConfig small_config(std::uint64_t seed = 1, CostProfile profile = CostProfile::Default) {
  EngineConfig cfg;
  cfg.seed = seed;
  cfg.profile = profile;
  return cfg;
}

inline SecretInt input(PartyNetwork& net, long value) {
  const std::vector<Integer> v{Integer(value)};
  return net.distribute_input(0, v).front();
}

inline std::vector<SecretInt> inputs(PartyNetwork& net, const std::vector<Integer>& values) {
  return net.distribute_input(0, values);
}

}  // namespace mpcstats::testing

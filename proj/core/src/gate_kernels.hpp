#pragma once

// Per-kind executors behind PartyNetwork::run_batch. Inputs are already
// type-checked; each kernel handles a whole batch of one kind.

#include <utility>
#include <vector>

#include "mpcstats/engine.hpp"

namespace mpcstats::detail {

using IntPair = std::pair<const SecretInt*, const SecretInt*>;
using FixedPair = std::pair<const SecretFixed*, const SecretFixed*>;

std::vector<SecretInt> multiply(PartyNetwork& net, const std::vector<IntPair>& pairs);
std::vector<SecretInt> divide_int(PartyNetwork& net, const std::vector<IntPair>& pairs);
std::vector<SecretFixed> divide_fixed(PartyNetwork& net, const std::vector<FixedPair>& pairs);
std::vector<SecretFixed> multiply_fixed(PartyNetwork& net, const std::vector<FixedPair>& pairs);
std::vector<SecretFixed> add_fixed(PartyNetwork& net, const std::vector<FixedPair>& pairs);
std::vector<SecretFixed> convert_to_fixed(PartyNetwork& net,
                                          const std::vector<const SecretInt*>& inputs);
std::vector<Integer> open_values(PartyNetwork& net, const std::vector<const SecretInt*>& inputs);

}  // namespace mpcstats::detail

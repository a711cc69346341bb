#include "symdyn/random.hpp"

namespace symdyn {

FiniteDynSys random_system(std::size_t state_count, SplitMix64& rng) {
    FiniteDynSys sys;
    for (std::size_t i = 0; i < state_count; ++i)
        sys.step[std::to_string(i)] = std::to_string(rng.below(state_count));
    return sys;
}

} // namespace symdyn

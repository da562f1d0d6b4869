#pragma once

#include "cychains/multivector.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cychains {

struct SuiteConfig {
    int dim = 2;
    int ucap = 4;
    int arity_cap = 3;
    int win_lo = -4;
    int win_hi = 4;
    int trials = 50;
    uint64_t seed = 42;
    std::string format = "text"; // text | json
    bool with_controls = false;

    // volume densities exercised by the volume-dependent identities
    std::vector<VolumeForm> volumes() const;

    void validate() const;
};

} // namespace cychains

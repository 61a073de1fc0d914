#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace skewring {

/// Outcome of a sampling or exhaustive check. Sampling checks are falsifiers:
/// passed == true means "no violation found in `trials` trials", not a proof.
struct CheckReport {
    std::string name;
    bool passed = true;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::string summary;
    std::vector<std::string> witnesses;

    void fail(std::string witness) {
        passed = false;
        witnesses.push_back(std::move(witness));
    }
};

}  // namespace skewring

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace frobvol::props {

struct PropertyResult {
    std::string name;
    size_t cases = 0;
    size_t failures = 0;
    std::string first_failure;
    double seconds = 0;
    bool ok() const { return cases > 0 && failures == 0; }
};

// Every property, each over `scale` times its base number of random cases.
std::vector<PropertyResult> run_all(uint64_t seed, size_t scale = 1);
std::vector<std::string> property_names();
PropertyResult run_one(const std::string& name, uint64_t seed, size_t scale = 1);

}  // namespace frobvol::props

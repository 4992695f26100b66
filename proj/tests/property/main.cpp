#include <CLI11.hpp>

#include <cstdio>

#include "properties.hpp"

int main(int argc, char** argv) {
    CLI::App app{"randomized property checks"};
    uint64_t seed = 20240501;
    size_t scale = 1;
    std::string only;
    app.add_option("--seed", seed);
    app.add_option("--scale", scale, "multiplies the number of random cases");
    app.add_option("--only", only, "run a single property by name");
    CLI11_PARSE(app, argc, argv);

    std::vector<frobvol::props::PropertyResult> results;
    if (only.empty())
        results = frobvol::props::run_all(seed, scale);
    else
        results.push_back(frobvol::props::run_one(only, seed, scale));
    int bad = 0;
    for (const auto& r : results) {
        std::printf("%s  %-45s %6zu cases %7.2fs", r.ok() ? "PASS" : "FAIL", r.name.c_str(), r.cases, r.seconds);
        if (!r.ok()) std::printf("  (%zu failed; first: %s)", r.failures, r.first_failure.c_str());
        std::printf("\n");
        bad += !r.ok();
    }
    return bad ? 1 : 0;
}

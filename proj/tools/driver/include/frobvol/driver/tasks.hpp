#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frobvol/driver/descriptor.hpp"
#include "frobvol/driver/problem.hpp"

namespace frobvol::driver {

// Command-line overrides applied on top of descriptor and task options.
struct RunOptions {
    std::optional<uint64_t> seed;
    std::optional<size_t> trials;
    std::optional<int> degree_bound;
    bool parallel = false;
};

const std::vector<std::string>& task_kinds();

// One task; errors become a FAIL entry with an "error" field.
Json run_task(const Problem& pr, const TaskSpec& task, const RunOptions& opt);

// Runs the descriptor's tasks in order (concurrently with `parallel`; the
// merged report is identical either way).
Json run_descriptor(const Descriptor& d, const RunOptions& opt);

// 0 when no task has a FAIL verdict.
int exit_code(const Json& report);

// "json" (sorted keys) or "text".
std::string emit_report(const Json& report, const std::string& format);

// Hilbert function of the Artinian reduction from the twists of a resolution
// of a Cohen-Macaulay quotient: the numerator of its Hilbert series divided
// by (1 - t)^c, c the length.
std::vector<int64_t> hilbert_from_twists(const std::vector<std::vector<int>>& twists);

}  // namespace frobvol::driver

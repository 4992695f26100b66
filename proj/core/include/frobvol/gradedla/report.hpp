#pragma once

#include <string>
#include <vector>

namespace frobvol::gradedla {

// Outcome of a verification: itemized failures with coordinates and witnesses.
struct CheckReport {
    bool ok = true;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
    size_t suppressed = 0;

    void fail(std::string what) {
        ok = false;
        if (failures.size() < 20)
            failures.push_back(std::move(what));
        else
            ++suppressed;
    }
    void merge(const CheckReport& o) {
        for (const auto& f : o.failures) fail(f);
        suppressed += o.suppressed;
        if (!o.ok) ok = false;
        notes.insert(notes.end(), o.notes.begin(), o.notes.end());
    }
};

}  // namespace frobvol::gradedla

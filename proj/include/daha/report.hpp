#pragma once

#include <optional>
#include <string>
#include <vector>

#include "daha/cyclotomic.hpp"

namespace daha {

struct Mismatch {
    int row = -1;
    int col = -1;
    CycScalar lhs, rhs;
};

struct CheckReport {
    std::string relation;
    bool ok = false;
    std::optional<Mismatch> first_mismatch;
    std::string note;
    // informational results are printed and serialized but do not gate a
    // suite (used for findings that are reported rather than asserted)
    bool informational = false;

    static CheckReport pass(std::string rel, std::string note = {}) {
        return {std::move(rel), true, std::nullopt, std::move(note), false};
    }
    static CheckReport fail(std::string rel, std::string note = {}) {
        return {std::move(rel), false, std::nullopt, std::move(note), false};
    }
    CheckReport as_informational() && {
        informational = true;
        return std::move(*this);
    }
};

struct CheckSuite {
    std::string name;
    std::vector<CheckReport> reports;

    void add(CheckReport r) { reports.push_back(std::move(r)); }
    bool all_ok() const {
        for (const auto& r : reports)
            if (!r.ok && !r.informational) return false;
        return true;
    }
    bool strictly_ok() const {
        for (const auto& r : reports)
            if (!r.ok) return false;
        return true;
    }
};

}  // namespace daha

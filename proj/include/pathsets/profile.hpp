#pragma once

#include <set>
#include <vector>

#include "pathsets/alphabet.hpp"

namespace pathsets {

/// Eventually periodic sequence of per-position symbol sets (A_k): the shape
/// of a leveled path set, the countable product of finite alphabets
/// A_0 x A_1 x ... . Every subset is nonempty and the period is nonempty.
struct LeveledProfile {
    std::vector<std::set<Symbol>> preperiod;
    std::vector<std::set<Symbol>> period;

    /// A_k, reading through the preperiod and then around the period.
    const std::set<Symbol>& at(size_t k) const {
        if (k < preperiod.size()) return preperiod[k];
        return period[(k - preperiod.size()) % period.size()];
    }

    friend bool operator==(const LeveledProfile& a, const LeveledProfile& b) {
        return a.preperiod == b.preperiod && a.period == b.period;
    }
};

} // namespace pathsets

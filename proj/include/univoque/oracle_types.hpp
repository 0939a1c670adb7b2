#pragma once

namespace univoque::oracle {

enum class BranchVerdict {
    Unique,     // exactly one admissible digit at every step examined
    Multiple,   // both digits admissible at the reported depth
    Infeasible, // the target leaves the representable interval
    Undecided,  // an admissibility test stayed unresolved at this precision
};

struct BranchResult {
    BranchVerdict verdict;
    /// Depth of the deciding step: the first branch point for Multiple, the
    /// failing step for Infeasible (0 = the initial feasibility test), the
    /// number of steps examined for Unique, the unresolved step for Undecided.
    int depth;
};

} // namespace univoque::oracle

#pragma once

#include <cstdint>
#include <vector>

#include "ccexp/dfa.hpp"

namespace ccexp::detail {

// Coarsest congruence of the transition structure refining the given labels
// (Hopcroft's splitter worklist); returns a class id per state. Shared by the
// DFA minimizer (labels = accept flags) and the DFAO minimizer (labels =
// output classes).
std::vector<std::uint32_t> refine_partition(std::size_t n, int nsym,
                                            const std::vector<State>& next,
                                            const std::vector<std::uint32_t>& label);

}  // namespace ccexp::detail

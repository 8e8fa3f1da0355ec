#pragma once

#include <cstdint>

#include "gsmon/core/law_report.hpp"

namespace gsmon {

/// `cases` seeded random signatures and graphs: the gs-monoidal axioms hold
/// under tg_equal, canonical labeling agrees with direct isomorphism search
/// and is invariant under relabeling, and evaluation into FinRel and into the
/// lifting Kleisli category is functorial and layering-invariant.
LawReport check_termgraph_suite(std::uint64_t cases = 500, std::uint64_t seed = 0);

/// One f-box read twice against two f-boxes fed by ∇: never tg-equal, and
/// their values agree exactly when f is functional, over every relation and
/// every lifting Kleisli arrow on sizes 1..max_size.
LawReport check_sharing_vs_copying(std::size_t max_size = 3);

}  // namespace gsmon

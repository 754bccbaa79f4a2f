#pragma once

#include <ostream>

namespace anthill::tool {

// Desk-scale validation tables, written as CSV. Each suite is fully
// deterministic: same build, same bytes.

// Uniform-array side-lobe counts on the default grid versus the reported
// reference counts; one computed row and, where available, one reported row
// per configuration, with mismatches called out in the note column.
void bench_lobes(std::ostream& os);

// First-null beamwidths: detected from the sampled pattern, the closed-form
// value for a uniform array, and the reported reference number side by side.
void bench_fnbw(std::ostream& os);

// next_fit versus the exhaustive optimum over every multiset of sizes
// 0.1..0.9 up to 4 items (capacity 1): bin counts and the approximation
// ratio per instance, worst ratio flagged in the final summary row.
void bench_packing(std::ostream& os);

}  // namespace anthill::tool

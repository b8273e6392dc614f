#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace bandcol::kernels {

// The two arithmetic inner loops of the solver, in scalar reference form and
// in SIMD variants selected at runtime.  All variants compute bit-identical
// integer results; the equivalence suite checks them against each other on
// random inputs.
//
//   penalty_profile  out[i] = sum_j max(0, dists[j] - |(i+1) - colors[j]|)
//                    i.e. the conflict value a vertex would have under each
//                    candidate color 1..out.size(), given its neighbors'
//                    colors and edge distances.
//
//   edge_penalty     sum_e max(0, dist[e] - |colors[u[e]] - colors[v[e]]|)
//                    the whole-coloring objective over an edge list.

enum class Backend {
    kScalar,
    kAvx2,
    kNeon,
};

struct Ops {
    const char* name;
    void (*penalty_profile)(std::span<const std::int32_t> colors,
                            std::span<const std::int32_t> dists,
                            std::span<std::int32_t> out);
    std::int64_t (*edge_penalty)(std::span<const std::int32_t> u,
                                 std::span<const std::int32_t> v,
                                 std::span<const std::int32_t> dist,
                                 std::span<const std::int32_t> colors);
};

// Currently selected implementation.  Defaults to the best backend the CPU
// supports; BANDCOL_KERNEL=scalar|avx2|neon in the environment overrides the
// choice before first use.
const Ops& active();

Backend active_backend();

// Switches the active implementation.  Returns false (and leaves the
// selection unchanged) if the backend is not available on this machine.
bool set_backend(Backend b);

std::vector<Backend> available_backends();

const Ops& ops_for(Backend b);

const char* backend_name(Backend b);

}  // namespace bandcol::kernels

#include "bandcol/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace bandcol::kernels {

void penalty_profile_scalar(std::span<const std::int32_t>, std::span<const std::int32_t>,
                            std::span<std::int32_t>);
std::int64_t edge_penalty_scalar(std::span<const std::int32_t>, std::span<const std::int32_t>,
                                 std::span<const std::int32_t>, std::span<const std::int32_t>);

#ifdef BANDCOL_HAVE_AVX2
void penalty_profile_avx2(std::span<const std::int32_t>, std::span<const std::int32_t>,
                          std::span<std::int32_t>);
std::int64_t edge_penalty_avx2(std::span<const std::int32_t>, std::span<const std::int32_t>,
                               std::span<const std::int32_t>, std::span<const std::int32_t>);
#endif

#ifdef BANDCOL_HAVE_NEON
void penalty_profile_neon(std::span<const std::int32_t>, std::span<const std::int32_t>,
                          std::span<std::int32_t>);
std::int64_t edge_penalty_neon(std::span<const std::int32_t>, std::span<const std::int32_t>,
                               std::span<const std::int32_t>, std::span<const std::int32_t>);
#endif

namespace {

constexpr Ops kScalarOps{"scalar", &penalty_profile_scalar, &edge_penalty_scalar};
#ifdef BANDCOL_HAVE_AVX2
constexpr Ops kAvx2Ops{"avx2", &penalty_profile_avx2, &edge_penalty_avx2};
#endif
#ifdef BANDCOL_HAVE_NEON
constexpr Ops kNeonOps{"neon", &penalty_profile_neon, &edge_penalty_neon};
#endif

bool cpu_supports(Backend b) {
    switch (b) {
        case Backend::kScalar:
            return true;
        case Backend::kAvx2:
#if defined(BANDCOL_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
            return __builtin_cpu_supports("avx2") != 0;
#else
            return false;
#endif
        case Backend::kNeon:
#ifdef BANDCOL_HAVE_NEON
            return true;  // baseline on aarch64
#else
            return false;
#endif
    }
    return false;
}

Backend detect_default() {
    if (const char* env = std::getenv("BANDCOL_KERNEL")) {
        if (std::strcmp(env, "scalar") == 0) return Backend::kScalar;
        if (std::strcmp(env, "avx2") == 0 && cpu_supports(Backend::kAvx2)) return Backend::kAvx2;
        if (std::strcmp(env, "neon") == 0 && cpu_supports(Backend::kNeon)) return Backend::kNeon;
    }
    if (cpu_supports(Backend::kAvx2)) return Backend::kAvx2;
    if (cpu_supports(Backend::kNeon)) return Backend::kNeon;
    return Backend::kScalar;
}

std::atomic<Backend>& selected() {
    static std::atomic<Backend> current{detect_default()};
    return current;
}

}  // namespace

const Ops& ops_for(Backend b) {
    switch (b) {
#ifdef BANDCOL_HAVE_AVX2
        case Backend::kAvx2:
            return kAvx2Ops;
#endif
#ifdef BANDCOL_HAVE_NEON
        case Backend::kNeon:
            return kNeonOps;
#endif
        default:
            return kScalarOps;
    }
}

const Ops& active() { return ops_for(selected().load(std::memory_order_relaxed)); }

Backend active_backend() { return selected().load(std::memory_order_relaxed); }

bool set_backend(Backend b) {
    if (!cpu_supports(b)) return false;
    selected().store(b, std::memory_order_relaxed);
    return true;
}

std::vector<Backend> available_backends() {
    std::vector<Backend> out{Backend::kScalar};
    if (cpu_supports(Backend::kAvx2)) out.push_back(Backend::kAvx2);
    if (cpu_supports(Backend::kNeon)) out.push_back(Backend::kNeon);
    return out;
}

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::kScalar:
            return "scalar";
        case Backend::kAvx2:
            return "avx2";
        case Backend::kNeon:
            return "neon";
    }
    return "?";
}

}  // namespace bandcol::kernels

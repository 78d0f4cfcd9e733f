#include "muntzlab/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string_view>

namespace muntzlab::kernels {

namespace {

bool avx2_runtime_ok() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const KernelTable* pick_default() {
    const char* env = std::getenv("MUNTZLAB_KERNEL");
    if (env != nullptr && std::string_view(env) == "scalar") return &scalar_table();
    const KernelTable* avx2 = avx2_table();
    if (avx2 != nullptr && avx2_runtime_ok()) {
        if (env == nullptr || std::string_view(env) == "avx2") return avx2;
    }
    return &scalar_table();
}

std::atomic<const KernelTable*>& slot() {
    static std::atomic<const KernelTable*> current{pick_default()};
    return current;
}

}  // namespace

const KernelTable& active() { return *slot().load(std::memory_order_acquire); }

std::string_view backend_name() { return active().name; }

bool force_backend(std::string_view name) {
    if (name == "scalar") {
        slot().store(&scalar_table(), std::memory_order_release);
        return true;
    }
    if (name == "avx2") {
        const KernelTable* avx2 = avx2_table();
        if (avx2 == nullptr || !avx2_runtime_ok()) return false;
        slot().store(avx2, std::memory_order_release);
        return true;
    }
    return false;
}

}  // namespace muntzlab::kernels

#include "deltanu/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace deltanu::kernels {

#ifdef DELTANU_HAVE_AVX2
const Dispatch* avx2_impl();  // kernels_avx2.cpp
#endif

const Dispatch* avx2_or_null() {
#ifdef DELTANU_HAVE_AVX2
    if (__builtin_cpu_supports("avx2")) return avx2_impl();
#endif
    return nullptr;
}

const Dispatch& active() {
    static const Dispatch* selected = [] {
        const Dispatch* best = avx2_or_null();
        if (const char* env = std::getenv("DELTANU_KERNELS")) {
            if (std::strcmp(env, "scalar") == 0) return &scalar();
            if (std::strcmp(env, "avx2") == 0 && best) return best;
        }
        return best ? best : &scalar();
    }();
    return *selected;
}

}  // namespace deltanu::kernels

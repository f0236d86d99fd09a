// Compiled with -mavx2; only referenced after a runtime cpuid check.
#include "deltanu/kernels.hpp"

#ifdef DELTANU_HAVE_AVX2

#include <immintrin.h>

namespace deltanu::kernels {
namespace {

void or_shl_avx2(std::uint64_t* dst, const std::uint64_t* src,
                 std::size_t shift, std::size_t words) {
    const std::size_t q = shift >> 6;
    const unsigned r = static_cast<unsigned>(shift & 63);
    if (q >= words) return;
    if (r == 0) {
        std::size_t i = q;
        for (; i + 4 <= words; i += 4) {
            __m256i d = _mm256_loadu_si256(reinterpret_cast<__m256i*>(dst + i));
            __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i - q));
            _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_or_si256(d, s));
        }
        for (; i < words; ++i) dst[i] |= src[i - q];
        return;
    }
    dst[q] |= src[0] << r;
    const __m128i cl = _mm_cvtsi64_si128(static_cast<long long>(r));
    const __m128i cr = _mm_cvtsi64_si128(static_cast<long long>(64 - r));
    std::size_t i = q + 1;
    for (; i + 4 <= words; i += 4) {
        __m256i hi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i - q));
        __m256i lo = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i - q - 1));
        __m256i d = _mm256_loadu_si256(reinterpret_cast<__m256i*>(dst + i));
        d = _mm256_or_si256(
            d, _mm256_or_si256(_mm256_sll_epi64(hi, cl), _mm256_srl_epi64(lo, cr)));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), d);
    }
    for (; i < words; ++i)
        dst[i] |= (src[i - q] << r) | (src[i - q - 1] >> (64 - r));
}

void or_shl1_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    if (words == 0) return;
    dst[0] |= src[0] << 1;
    std::size_t i = 1;
    for (; i + 4 <= words; i += 4) {
        __m256i hi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i lo = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i - 1));
        __m256i d = _mm256_loadu_si256(reinterpret_cast<__m256i*>(dst + i));
        d = _mm256_or_si256(
            d, _mm256_or_si256(_mm256_slli_epi64(hi, 1), _mm256_srli_epi64(lo, 63)));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), d);
    }
    for (; i < words; ++i) dst[i] |= (src[i] << 1) | (src[i - 1] >> 63);
}

void or_rows_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<__m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_or_si256(d, s));
    }
    for (; i < words; ++i) dst[i] |= src[i];
}

}  // namespace

const Dispatch* avx2_impl() {
    static const Dispatch d{or_shl_avx2, or_shl1_avx2, or_rows_avx2, "avx2"};
    return &d;
}

}  // namespace deltanu::kernels

#endif  // DELTANU_HAVE_AVX2

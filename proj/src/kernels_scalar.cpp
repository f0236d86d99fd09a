#include "deltanu/kernels.hpp"

namespace deltanu::kernels {
namespace {

void or_shl_scalar(std::uint64_t* dst, const std::uint64_t* src,
                   std::size_t shift, std::size_t words) {
    const std::size_t q = shift >> 6;
    const unsigned r = static_cast<unsigned>(shift & 63);
    if (q >= words) return;
    if (r == 0) {
        for (std::size_t i = q; i < words; ++i) dst[i] |= src[i - q];
        return;
    }
    dst[q] |= src[0] << r;
    for (std::size_t i = q + 1; i < words; ++i)
        dst[i] |= (src[i - q] << r) | (src[i - q - 1] >> (64 - r));
}

void or_shl1_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < words; ++i) {
        const std::uint64_t s = src[i];
        dst[i] |= (s << 1) | carry;
        carry = s >> 63;
    }
}

void or_rows_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i) dst[i] |= src[i];
}

}  // namespace

const Dispatch& scalar() {
    static const Dispatch d{or_shl_scalar, or_shl1_scalar, or_rows_scalar, "scalar"};
    return d;
}

}  // namespace deltanu::kernels

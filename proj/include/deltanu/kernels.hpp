#pragma once

#include <cstddef>
#include <cstdint>

namespace deltanu::kernels {

// Bit rows are arrays of 64-bit limbs, bit i of the row living at
// limb i/64, bit i%64. Every kernel requires dst and src to be distinct
// arrays; bits shifted past the top limb are dropped.

/// dst |= src << shift_bits
using OrShlFn = void (*)(std::uint64_t* dst, const std::uint64_t* src,
                         std::size_t shift_bits, std::size_t words);
/// dst |= src << 1 (the hot case of the length-set recurrence)
using OrShl1Fn = void (*)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
/// dst |= src
using OrFn = void (*)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);

struct Dispatch {
    OrShlFn or_shl;
    OrShl1Fn or_shl1;
    OrFn or_rows;
    const char* name;
};

/// Portable reference kernels.
const Dispatch& scalar();

/// AVX2 kernels, or nullptr when the binary or the CPU lacks them.
const Dispatch* avx2_or_null();

/// Variant picked at startup for this CPU. DELTANU_KERNELS=scalar|avx2
/// overrides the choice.
const Dispatch& active();

inline bool test_bit(const std::uint64_t* w, std::size_t i) {
    return (w[i >> 6] >> (i & 63)) & 1u;
}
inline void set_bit(std::uint64_t* w, std::size_t i) {
    w[i >> 6] |= std::uint64_t{1} << (i & 63);
}
inline std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

}  // namespace deltanu::kernels

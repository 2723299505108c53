// Copyright 2026 vtp developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#include "vtp/core/sha256.hpp"

#include <cassert>
#include <cstring>
#include <vector>

#if defined(__x86_64__) || defined(_M_X64)
#include <cpuid.h>
#endif

namespace vtp::core
{

namespace
{

constexpr std::uint32_t K[64] = {
    0x428a2f98, 0x71374491, 0xb5c0fbcf, 0xe9b5dba5, 0x3956c25b, 0x59f111f1,
    0x923f82a4, 0xab1c5ed5, 0xd807aa98, 0x12835b01, 0x243185be, 0x550c7dc3,
    0x72be5d74, 0x80deb1fe, 0x9bdc06a7, 0xc19bf174, 0xe49b69c1, 0xefbe4786,
    0x0fc19dc6, 0x240ca1cc, 0x2de92c6f, 0x4a7484aa, 0x5cb0a9dc, 0x76f988da,
    0x983e5152, 0xa831c66d, 0xb00327c8, 0xbf597fc7, 0xc6e00bf3, 0xd5a79147,
    0x06ca6351, 0x14292967, 0x27b70a85, 0x2e1b2138, 0x4d2c6dfc, 0x53380d13,
    0x650a7354, 0x766a0abb, 0x81c2c92e, 0x92722c85, 0xa2bfe8a1, 0xa81a664b,
    0xc24b8b70, 0xc76c51a3, 0xd192e819, 0xd6990624, 0xf40e3585, 0x106aa070,
    0x19a4c116, 0x1e376c08, 0x2748774c, 0x34b0bcb5, 0x391c0cb3, 0x4ed8aa4a,
    0x5b9cca4f, 0x682e6ff3, 0x748f82ee, 0x78a5636f, 0x84c87814, 0x8cc70208,
    0x90befffa, 0xa4506ceb, 0xbef9a3f7, 0xc67178f2};

constexpr std::uint32_t INIT[8] = {0x6a09e667, 0xbb67ae85, 0x3c6ef372,
                                   0xa54ff53a, 0x510e527f, 0x9b05688c,
                                   0x1f83d9ab, 0x5be0cd19};

inline std::uint32_t
rotr(std::uint32_t x, unsigned n)
{
    return (x >> n) | (x << (32 - n));
}

inline std::uint32_t
be32(std::uint8_t const* p)
{
    return (static_cast<std::uint32_t>(p[0]) << 24) |
           (static_cast<std::uint32_t>(p[1]) << 16) |
           (static_cast<std::uint32_t>(p[2]) << 8) |
           static_cast<std::uint32_t>(p[3]);
}

using TransformFn = void (*)(std::uint32_t[8], std::uint8_t const*,
                             std::size_t);
using Transform8Fn = void (*)(std::uint32_t[8][8],
                              std::uint8_t const* const[8]);

struct Backend
{
    TransformFn transform = nullptr;
    Transform8Fn transform8 = nullptr;
    char const* name = "scalar";
};

Backend
detectBackend()
{
    Backend b;
    b.transform = &detail::sha256TransformScalar;
#if defined(__x86_64__) || defined(_M_X64)
    bool const shani = sha256CpuHasShaNi();
    bool const avx2 = sha256CpuHasAvx2();
    if (shani)
        b.transform = &detail::sha256TransformShaNi;
    if (avx2)
        b.transform8 = &detail::sha256TransformAvx2x8;
    if (shani && avx2)
        b.name = "sha-ni+avx2x8";
    else if (shani)
        b.name = "sha-ni";
    else if (avx2)
        b.name = "scalar+avx2x8";
#endif
    return b;
}

Backend&
backend()
{
    static Backend b = detectBackend();
    return b;
}

}

namespace detail
{

void
sha256TransformScalar(std::uint32_t state[8], std::uint8_t const* data,
                      std::size_t nblocks)
{
    while (nblocks--)
    {
        std::uint32_t w[64];
        for (int t = 0; t < 16; ++t)
            w[t] = be32(data + 4 * t);
        for (int t = 16; t < 64; ++t)
        {
            std::uint32_t s0 = rotr(w[t - 15], 7) ^ rotr(w[t - 15], 18) ^
                               (w[t - 15] >> 3);
            std::uint32_t s1 =
                rotr(w[t - 2], 17) ^ rotr(w[t - 2], 19) ^ (w[t - 2] >> 10);
            w[t] = w[t - 16] + s0 + w[t - 7] + s1;
        }

        std::uint32_t a = state[0], b = state[1], c = state[2], d = state[3];
        std::uint32_t e = state[4], f = state[5], g = state[6], h = state[7];

        for (int t = 0; t < 64; ++t)
        {
            std::uint32_t S1 = rotr(e, 6) ^ rotr(e, 11) ^ rotr(e, 25);
            std::uint32_t ch = (e & f) ^ (~e & g);
            std::uint32_t t1 = h + S1 + ch + K[t] + w[t];
            std::uint32_t S0 = rotr(a, 2) ^ rotr(a, 13) ^ rotr(a, 22);
            std::uint32_t maj = (a & b) ^ (a & c) ^ (b & c);
            std::uint32_t t2 = S0 + maj;
            h = g;
            g = f;
            f = e;
            e = d + t1;
            d = c;
            c = b;
            b = a;
            a = t1 + t2;
        }

        state[0] += a;
        state[1] += b;
        state[2] += c;
        state[3] += d;
        state[4] += e;
        state[5] += f;
        state[6] += g;
        state[7] += h;
        data += 64;
    }
}

}

Sha256::Sha256()
{
    std::memcpy(mState, INIT, sizeof(mState));
    mTotalLen = 0;
    mBufLen = 0;
}

Sha256&
Sha256::update(BytesView data)
{
    auto const* p = data.data();
    std::size_t n = data.size();
    mTotalLen += n;

    if (mBufLen != 0)
    {
        std::size_t take = std::min(n, 64 - mBufLen);
        std::memcpy(mBuf + mBufLen, p, take);
        mBufLen += take;
        p += take;
        n -= take;
        if (mBufLen == 64)
        {
            backend().transform(mState, mBuf, 1);
            mBufLen = 0;
        }
    }
    if (n >= 64)
    {
        std::size_t blocks = n / 64;
        backend().transform(mState, p, blocks);
        p += blocks * 64;
        n -= blocks * 64;
    }
    if (n != 0)
    {
        std::memcpy(mBuf, p, n);
        mBufLen = n;
    }
    return *this;
}

Sha256&
Sha256::update(std::string_view data)
{
    return update(view(data));
}

Digest
Sha256::finish()
{
    std::uint64_t const bitLen = mTotalLen * 8;
    std::uint8_t tail[128];
    std::size_t tailLen = 0;
    tail[tailLen++] = 0x80;
    while ((mBufLen + tailLen) % 64 != 56)
        tail[tailLen++] = 0;
    for (int i = 7; i >= 0; --i)
        tail[tailLen++] = static_cast<std::uint8_t>(bitLen >> (8 * i));
    update(BytesView(tail, tailLen));
    assert(mBufLen == 0);

    Digest d;
    for (int i = 0; i < 8; ++i)
    {
        d.bytes[4 * i + 0] = static_cast<std::uint8_t>(mState[i] >> 24);
        d.bytes[4 * i + 1] = static_cast<std::uint8_t>(mState[i] >> 16);
        d.bytes[4 * i + 2] = static_cast<std::uint8_t>(mState[i] >> 8);
        d.bytes[4 * i + 3] = static_cast<std::uint8_t>(mState[i]);
    }

    std::memcpy(mState, INIT, sizeof(mState));
    mTotalLen = 0;
    mBufLen = 0;
    return d;
}

Digest
sha256(BytesView data)
{
    Sha256 h;
    h.update(data);
    return h.finish();
}

Digest
sha256(std::string_view data)
{
    return sha256(view(data));
}

void
sha256Batch(std::uint8_t const* const* msgs, std::size_t len,
            std::size_t count, Digest* out)
{
    std::size_t i = 0;
    Transform8Fn t8 = backend().transform8;
    if (t8 != nullptr && count >= 8)
    {
        // Same length means identical padding; lay the 8 padded messages
        // out contiguously and feed the blocks lane by lane.
        std::size_t const paddedLen = ((len + 9 + 63) / 64) * 64;
        std::size_t const nblocks = paddedLen / 64;
        std::vector<std::uint8_t> padded(8 * paddedLen, 0);
        for (; i + 8 <= count; i += 8)
        {
            for (int lane = 0; lane < 8; ++lane)
            {
                std::uint8_t* dst = padded.data() + lane * paddedLen;
                std::memset(dst, 0, paddedLen);
                std::memcpy(dst, msgs[i + lane], len);
                dst[len] = 0x80;
                std::uint64_t bitLen = static_cast<std::uint64_t>(len) * 8;
                for (int k = 0; k < 8; ++k)
                    dst[paddedLen - 1 - k] =
                        static_cast<std::uint8_t>(bitLen >> (8 * k));
            }
            std::uint32_t states[8][8];
            for (int lane = 0; lane < 8; ++lane)
                std::memcpy(states[lane], INIT, sizeof(INIT));
            for (std::size_t blk = 0; blk < nblocks; ++blk)
            {
                std::uint8_t const* blocks[8];
                for (int lane = 0; lane < 8; ++lane)
                    blocks[lane] = padded.data() + lane * paddedLen + blk * 64;
                t8(states, blocks);
            }
            for (int lane = 0; lane < 8; ++lane)
                for (int word = 0; word < 8; ++word)
                {
                    std::uint32_t v = states[lane][word];
                    out[i + lane].bytes[4 * word + 0] =
                        static_cast<std::uint8_t>(v >> 24);
                    out[i + lane].bytes[4 * word + 1] =
                        static_cast<std::uint8_t>(v >> 16);
                    out[i + lane].bytes[4 * word + 2] =
                        static_cast<std::uint8_t>(v >> 8);
                    out[i + lane].bytes[4 * word + 3] =
                        static_cast<std::uint8_t>(v);
                }
        }
    }
    for (; i < count; ++i)
        out[i] = sha256(BytesView(msgs[i], len));
}

std::string_view
sha256BackendName()
{
    return backend().name;
}

bool
sha256SelectBackend(std::string_view name)
{
    if (name == "auto")
    {
        backend() = detectBackend();
        return true;
    }
    if (name == "scalar")
    {
        backend() = Backend{&detail::sha256TransformScalar, nullptr, "scalar"};
        return true;
    }
#if defined(__x86_64__) || defined(_M_X64)
    if (name == "sha-ni" && sha256CpuHasShaNi())
    {
        backend() =
            Backend{&detail::sha256TransformShaNi, nullptr, "sha-ni"};
        return true;
    }
    if (name == "scalar+avx2x8" && sha256CpuHasAvx2())
    {
        backend() = Backend{&detail::sha256TransformScalar,
                            &detail::sha256TransformAvx2x8, "scalar+avx2x8"};
        return true;
    }
    if (name == "sha-ni+avx2x8" && sha256CpuHasShaNi() && sha256CpuHasAvx2())
    {
        backend() = Backend{&detail::sha256TransformShaNi,
                            &detail::sha256TransformAvx2x8, "sha-ni+avx2x8"};
        return true;
    }
#endif
    return false;
}

namespace
{

struct CpuFeatures
{
    bool shani = false;
    bool avx2 = false;
};

CpuFeatures
detectCpu()
{
    CpuFeatures f;
#if defined(__x86_64__) || defined(_M_X64)
    unsigned eax = 0, ebx = 0, ecx = 0, edx = 0;
    if (!__get_cpuid(1, &eax, &ebx, &ecx, &edx))
        return f;
    bool const sse41 = (ecx & (1u << 19)) != 0;
    bool const osxsave = (ecx & (1u << 27)) != 0;

    bool ymmEnabled = false;
    if (osxsave)
    {
        std::uint32_t xlo, xhi;
        __asm__ volatile("xgetbv" : "=a"(xlo), "=d"(xhi) : "c"(0));
        ymmEnabled = (xlo & 0x6) == 0x6; // XMM and YMM state
    }

    unsigned eax7 = 0, ebx7 = 0, ecx7 = 0, edx7 = 0;
    if (__get_cpuid_count(7, 0, &eax7, &ebx7, &ecx7, &edx7))
    {
        f.shani = sse41 && (ebx7 & (1u << 29)) != 0;
        f.avx2 = ymmEnabled && (ebx7 & (1u << 5)) != 0;
    }
#endif
    return f;
}

CpuFeatures const&
cpuFeatures()
{
    static CpuFeatures const f = detectCpu();
    return f;
}

}

bool
sha256CpuHasShaNi()
{
    return cpuFeatures().shani;
}

bool
sha256CpuHasAvx2()
{
    return cpuFeatures().avx2;
}

}

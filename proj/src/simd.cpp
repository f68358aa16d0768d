/*
   Copyright 2026 The qgalois Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "qgalois/simd.hpp"

#include <cstdlib>
#include <cstring>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define QG_HAVE_X86 1
#endif

namespace qg::simd {

void axpy_mod_scalar(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c,
                     std::uint32_t p) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = (dst[i] + c * src[i]) % p;
}

#ifdef QG_HAVE_X86

__attribute__((target("avx2"))) void axpy_mod_avx2(std::uint32_t* dst, const std::uint32_t* src,
                                                   std::size_t n, std::uint32_t c, std::uint32_t p) {
    const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i zero = _mm256_setzero_si256();
    const __m256d vinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        // below 2^31, so signed lanes are safe
        __m256i x = _mm256_add_epi32(d, _mm256_mullo_epi32(s, vc));
        __m256d lo = _mm256_cvtepi32_pd(_mm256_castsi256_si128(x));
        __m256d hi = _mm256_cvtepi32_pd(_mm256_extracti128_si256(x, 1));
        lo = _mm256_floor_pd(_mm256_mul_pd(lo, vinv));
        hi = _mm256_floor_pd(_mm256_mul_pd(hi, vinv));
        __m256i q = _mm256_set_m128i(_mm256_cvttpd_epi32(hi), _mm256_cvttpd_epi32(lo));
        __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, vp));
        // quotient estimate can be off by one either way
        r = _mm256_add_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(zero, r), vp));
        r = _mm256_sub_epi32(r, _mm256_andnot_si256(_mm256_cmpgt_epi32(vp, r), vp));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), r);
    }
    axpy_mod_scalar(dst + i, src + i, n - i, c, p);
}

bool avx2_available() {
    static const bool ok = __builtin_cpu_supports("avx2");
    return ok;
}

#else

void axpy_mod_avx2(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c,
                   std::uint32_t p) {
    axpy_mod_scalar(dst, src, n, c, p);
}

bool avx2_available() { return false; }

#endif

namespace {

using Kernel = void (*)(std::uint32_t*, const std::uint32_t*, std::size_t, std::uint32_t, std::uint32_t);

Kernel pick() {
    const char* force = std::getenv("QG_FORCE_SCALAR");
    if (force && std::strcmp(force, "1") == 0) return axpy_mod_scalar;
    return avx2_available() ? axpy_mod_avx2 : axpy_mod_scalar;
}

Kernel kernel() {
    static const Kernel k = pick();
    return k;
}

}  // namespace

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c, std::uint32_t p) {
    if (c == 0 || n == 0) return;
    kernel()(dst, src, n, c, p);
}

const char* active_kernel() { return kernel() == axpy_mod_avx2 ? "avx2" : "scalar"; }

}  // namespace qg::simd

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

#ifndef QGALOIS_SIMD_HPP
#define QGALOIS_SIMD_HPP

#include <cstddef>
#include <cstdint>

namespace qg::simd {

// dst[i] = (dst[i] + c * src[i]) mod p for i < n.
// Requires p < 2^15, c < p and every dst[i], src[i] in [0, p).
void axpy_mod_scalar(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c,
                     std::uint32_t p);
void axpy_mod_avx2(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c,
                   std::uint32_t p);

bool avx2_available();

// Runtime dispatch; QG_FORCE_SCALAR=1 in the environment pins the scalar path.
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c, std::uint32_t p);

const char* active_kernel();

}  // namespace qg::simd

#endif

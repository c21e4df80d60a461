/*
 *   Copyright 2026 the LPF runtime authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef LPF_ERROR_HPP
#define LPF_ERROR_HPP

#include <cstdint>
#include <string_view>

namespace lpf {

/// Result of every primitive. Mitigable errors (out_of_capacity,
/// out_of_memory) leave all observable runtime state unchanged; a fatal
/// error renders the context unusable. Error state is process-local.
enum class err : std::uint8_t {
    success = 0,
    out_of_capacity,
    out_of_memory,
    fatal
};

constexpr bool mitigable( err e ) noexcept
{
    return e == err::out_of_capacity || e == err::out_of_memory;
}

constexpr std::string_view to_string( err e ) noexcept
{
    switch ( e ) {
        case err::success:         return "success";
        case err::out_of_capacity: return "out of capacity";
        case err::out_of_memory:   return "out of memory";
        case err::fatal:           return "fatal";
    }
    return "unknown";
}

} // namespace lpf

#endif

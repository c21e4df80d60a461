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

#ifndef LPF_CONFIG_HPP
#define LPF_CONFIG_HPP

#include <cstdint>
#include <cstdlib>
#include <string>

namespace lpf {

using process_id = std::uint32_t;

/// Requests as many processes as the backend supports.
inline constexpr process_id MAX_P = 0xFFFFFFFFu;

/// Algorithm used for the metadata all-to-alls inside sync.
enum class meta_exchange : std::uint8_t {
    direct, ///< p-1 pairwise messages per process
    bruck   ///< randomised two-phase routing, 2*ceil(log2 p) rounds
};

/// Per-context tunables. Everything has a working default; from_env()
/// overlays LPF_* environment variables.
struct config {
    /// Enables collective-order checking of global registrations,
    /// double-deregister detection and read-write overlap detection.
    /// Off by default so put/get/sync keep their constant-factor costs.
    bool debug = false;

    meta_exchange meta = meta_exchange::direct;

    /// Seed for the randomised routing; same seed => same intermediates.
    std::uint64_t seed = 0x9e3779b97f4a7c15ull;

    /// Tree barrier fan-in; 0 selects the startup auto-tune over {2,4,8}.
    unsigned barrier_fanin = 0;

    /// Messages up to this size count towards the small-message h-relation.
    std::size_t small_limit = 4096;

    /// Deadline for TCP collectives (barriers, exchanges).
    std::uint32_t timeout_ms = 30000;

    static config from_env()
    {
        config c;
        if ( const char * v = std::getenv( "LPF_DEBUG" ) )
            c.debug = ( std::string( v ) != "0" );
        if ( const char * v = std::getenv( "LPF_META_EXCHANGE" ) )
            c.meta = ( std::string( v ) == "bruck" ) ? meta_exchange::bruck
                                                     : meta_exchange::direct;
        if ( const char * v = std::getenv( "LPF_SEED" ) )
            c.seed = std::strtoull( v, nullptr, 0 );
        if ( const char * v = std::getenv( "LPF_BARRIER_FANIN" ) )
            c.barrier_fanin = static_cast<unsigned>( std::strtoul( v, nullptr, 0 ) );
        if ( const char * v = std::getenv( "LPF_SMALL_LIMIT" ) )
            c.small_limit = std::strtoull( v, nullptr, 0 );
        if ( const char * v = std::getenv( "LPF_TIMEOUT_MS" ) )
            c.timeout_ms = static_cast<std::uint32_t>( std::strtoul( v, nullptr, 0 ) );
        return c;
    }
};

} // namespace lpf

#endif

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

#ifndef LPF_MACHINE_PARAMS_HPP
#define LPF_MACHINE_PARAMS_HPP

#include <array>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "config.hpp"

namespace lpf {

/// Environment variable naming the machine-parameters file read by probe.
inline constexpr const char * machine_params_env = "LPF_MACHINE_PARAMS";

/// Word sizes (bytes) a parameters table may carry entries for.
inline constexpr std::array<std::size_t, 4> param_word_sizes = { 8, 64, 1024,
    1048576 };

/// The (p, g, l) table behind probe. g is in seconds per word and l in
/// seconds, per word size. Lookups are a constant-time array scan over the
/// four known word sizes; missing entries fall back to the defaults.
struct machine_params {
    enum class origin : std::uint8_t { defaults, measured };

    struct entry {
        double g = 0.0; ///< seconds per word
        double l = 0.0; ///< seconds
    };

    process_id p = 1;
    origin source = origin::defaults;
    std::string file{}; ///< path the table was read from, when measured

    std::array<std::optional<entry>, param_word_sizes.size()> table{};

    /// Documented defaults used when no file is configured: 1 ns/word
    /// throughput and 1 us latency at every word size.
    static constexpr entry default_entry() noexcept { return { 1e-9, 1e-6 }; }

    static constexpr int index_of( std::size_t w ) noexcept
    {
        for ( std::size_t i = 0; i < param_word_sizes.size(); ++i )
            if ( param_word_sizes[ i ] == w )
                return static_cast<int>( i );
        return -1;
    }

    entry at( std::size_t word_size ) const noexcept
    {
        const int i = index_of( word_size );
        if ( i >= 0 && table[ static_cast<std::size_t>( i ) ].has_value() )
            return *table[ static_cast<std::size_t>( i ) ];
        return default_entry();
    }

    void set( std::size_t word_size, entry e )
    {
        const int i = index_of( word_size );
        if ( i >= 0 )
            table[ static_cast<std::size_t>( i ) ] = e;
    }

    static machine_params defaults( process_id nprocs )
    {
        machine_params m;
        m.p = nprocs;
        m.source = origin::defaults;
        return m;
    }
};

/// Parses the machine-parameters file format:
///   p=<int>
///   w=<bytes> g=<float> l=<float>
/// Unknown lines are ignored.
inline std::optional<machine_params> parse_machine_params( std::istream & in )
{
    machine_params m;
    bool have_p = false;
    std::string line;
    while ( std::getline( in, line ) ) {
        unsigned long long p = 0;
        double w = 0, g = 0, l = 0;
        if ( std::sscanf( line.c_str(), "p=%llu", &p ) == 1 ) {
            m.p = static_cast<process_id>( p );
            have_p = true;
        } else if ( std::sscanf( line.c_str(), "w=%lf g=%lf l=%lf", &w, &g,
                            &l ) == 3 ) {
            m.set( static_cast<std::size_t>( w ), { g, l } );
        }
        // anything else: ignored
    }
    if ( !have_p )
        return std::nullopt;
    m.source = machine_params::origin::measured;
    return m;
}

inline std::optional<machine_params> load_machine_params(
        const std::string & path )
{
    std::ifstream in( path );
    if ( !in )
        return std::nullopt;
    auto m = parse_machine_params( in );
    if ( m )
        m->file = path;
    return m;
}

/// Writes the table with enough digits that parsing recovers every double
/// bit-exactly.
inline void write_machine_params( std::ostream & out,
        const machine_params & m )
{
    out << "p=" << m.p << "\n";
    char buf[ 128 ];
    for ( std::size_t i = 0; i < param_word_sizes.size(); ++i ) {
        if ( !m.table[ i ].has_value() )
            continue;
        std::snprintf( buf, sizeof( buf ), "w=%zu g=%.17g l=%.17g",
            param_word_sizes[ i ], m.table[ i ]->g, m.table[ i ]->l );
        out << buf << "\n";
    }
}

inline bool write_machine_params_file( const std::string & path,
        const machine_params & m )
{
    std::ofstream out( path );
    if ( !out )
        return false;
    write_machine_params( out, m );
    return static_cast<bool>( out );
}

} // namespace lpf

#endif

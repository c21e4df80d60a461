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

#ifndef LPF_ARGS_HPP
#define LPF_ARGS_HPP

#include <cstddef>
#include <map>
#include <mutex>
#include <span>
#include <string>
#include <vector>

namespace lpf {

/// Arbitrary data passed into an SPMD section. Under exec only the root
/// process sees a non-empty input and only the root's output is visible to
/// the caller afterwards; under hook every process passes its own args.
/// Function entry points travel by name and are resolved against the
/// process-local symbol registry, never by transferring code.
struct args {
    std::span<const std::byte> input{};
    std::span<std::byte> output{};
    std::vector<std::string> symbols{};
};

inline const args NO_ARGS{};

template <typename T>
std::span<const std::byte> as_input( const T & v ) noexcept
{
    return { reinterpret_cast<const std::byte *>( &v ), sizeof( T ) };
}

template <typename T>
std::span<std::byte> as_output( T & v ) noexcept
{
    return { reinterpret_cast<std::byte *>( &v ), sizeof( T ) };
}

/// Process-local table of named entry points, populated at startup.
class symbol_registry {
public:
    using entry_point = void ( * )();

    static symbol_registry & instance()
    {
        static symbol_registry r;
        return r;
    }

    void add( const std::string & name, entry_point fn )
    {
        std::lock_guard<std::mutex> lk( m_mutex );
        m_table[ name ] = fn;
    }

    entry_point lookup( const std::string & name ) const
    {
        std::lock_guard<std::mutex> lk( m_mutex );
        auto it = m_table.find( name );
        return it == m_table.end() ? nullptr : it->second;
    }

private:
    mutable std::mutex m_mutex;
    std::map<std::string, entry_point> m_table;
};

inline void register_symbol( const std::string & name,
        symbol_registry::entry_point fn )
{
    symbol_registry::instance().add( name, fn );
}

inline symbol_registry::entry_point resolve_symbol( const std::string & name )
{
    return symbol_registry::instance().lookup( name );
}

} // namespace lpf

#endif

/* fusemap: fused standard-cell and LUT technology mapping library
 * Copyright (C) 2025 fusemap authors
 *
 * Permission is hereby granted, free of charge, to any person
 * obtaining a copy of this software and associated documentation
 * files (the "Software"), to deal in the Software without
 * restriction, including without limitation the rights to use,
 * copy, modify, merge, publish, distribute, sublicense, and/or sell
 * copies of the Software, and to permit persons to whom the
 * Software is furnished to do so, subject to the following
 * conditions:
 *
 * The above copyright notice and this permission notice shall be
 * included in all copies or substantial portions of the Software.
 *
 * THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
 * EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
 * OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
 * NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
 * HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
 * WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
 * FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
 * OTHER DEALINGS IN THE SOFTWARE.
 */

/*!
  \file rng.hpp
  \brief Deterministic random utilities

  std::mt19937_64 is fully specified by the standard; the helpers below avoid
  std::uniform_*_distribution, whose output is implementation-defined, so that
  seeded runs produce identical bytes on every platform.
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace fusemap
{

inline uint64_t splitmix64( uint64_t x )
{
  x += 0x9e3779b97f4a7c15ull;
  x = ( x ^ ( x >> 30 ) ) * 0xbf58476d1ce4e5b9ull;
  x = ( x ^ ( x >> 27 ) ) * 0x94d049bb133111ebull;
  return x ^ ( x >> 31 );
}

/*! \brief Uniform double in [0, 1) with 53 random bits. */
inline double unit_real( std::mt19937_64& gen )
{
  return static_cast<double>( gen() >> 11 ) * 0x1.0p-53;
}

/*! \brief Unbiased uniform integer in [0, bound). */
inline uint64_t bounded_int( std::mt19937_64& gen, uint64_t bound )
{
  if ( bound <= 1u )
    return 0;
  unsigned __int128 m = static_cast<unsigned __int128>( gen() ) * bound;
  auto low = static_cast<uint64_t>( m );
  if ( low < bound )
  {
    uint64_t const threshold = ( 0u - bound ) % bound;
    while ( low < threshold )
    {
      m = static_cast<unsigned __int128>( gen() ) * bound;
      low = static_cast<uint64_t>( m );
    }
  }
  return static_cast<uint64_t>( m >> 64 );
}

/*! \brief Uniform n-subset of {0, .., universe-1}, returned sorted. */
inline std::vector<uint32_t> sample_subset( std::mt19937_64& gen, uint32_t universe, uint32_t n )
{
  std::vector<uint32_t> pool( universe );
  for ( uint32_t i = 0; i < universe; ++i )
    pool[i] = i;
  for ( uint32_t i = 0; i < n; ++i )
  {
    auto const j = i + static_cast<uint32_t>( bounded_int( gen, universe - i ) );
    std::swap( pool[i], pool[j] );
  }
  pool.resize( n );
  std::sort( pool.begin(), pool.end() );
  return pool;
}

} // namespace fusemap

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
  \file simulation.hpp
  \brief Bit-parallel simulation (64 patterns per word)
*/

#pragma once

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "aig.hpp"
#include "rng.hpp"

namespace fusemap
{

/*! \brief Packed Boolean values for a set of terminals.
 *
 * Pattern p of terminal t lives in bit (p % 64) of word (p / 64).  Bits past
 * num_patterns are kept zero so whole-word comparisons are meaningful.
 */
class sim_vectors
{
public:
  sim_vectors() = default;

  sim_vectors( uint32_t num_terminals, uint32_t num_patterns )
      : terminals_( num_terminals ), patterns_( num_patterns ),
        wpt_( ( num_patterns + 63u ) / 64u ), bits_( size_t( num_terminals ) * wpt_, 0ull )
  {
  }

  uint32_t num_terminals() const { return terminals_; }
  uint32_t num_patterns() const { return patterns_; }
  uint32_t words_per_terminal() const { return wpt_; }

  uint64_t word( uint32_t terminal, uint32_t w ) const { return bits_[size_t( terminal ) * wpt_ + w]; }
  uint64_t& word( uint32_t terminal, uint32_t w ) { return bits_[size_t( terminal ) * wpt_ + w]; }

  bool get( uint32_t terminal, uint32_t pattern ) const
  {
    return ( word( terminal, pattern >> 6u ) >> ( pattern & 63u ) ) & 1u;
  }

  void set( uint32_t terminal, uint32_t pattern, bool value )
  {
    if ( value )
      word( terminal, pattern >> 6u ) |= 1ull << ( pattern & 63u );
    else
      word( terminal, pattern >> 6u ) &= ~( 1ull << ( pattern & 63u ) );
  }

  /*! \brief Zeroes the bits past num_patterns in the last word. */
  void mask_tail()
  {
    if ( patterns_ % 64u == 0u || wpt_ == 0u )
      return;
    uint64_t const m = ( 1ull << ( patterns_ % 64u ) ) - 1u;
    for ( uint32_t t = 0; t < terminals_; ++t )
      word( t, wpt_ - 1u ) &= m;
  }

  bool operator==( const sim_vectors& other ) const
  {
    return terminals_ == other.terminals_ && patterns_ == other.patterns_ && bits_ == other.bits_;
  }

private:
  uint32_t terminals_ = 0;
  uint32_t patterns_ = 0;
  uint32_t wpt_ = 0;
  std::vector<uint64_t> bits_;
};

inline sim_vectors random_patterns( uint32_t num_terminals, uint32_t num_patterns, uint64_t seed )
{
  sim_vectors v( num_terminals, num_patterns );
  std::mt19937_64 gen( seed );
  for ( uint32_t t = 0; t < num_terminals; ++t )
    for ( uint32_t w = 0; w < v.words_per_terminal(); ++w )
      v.word( t, w ) = gen();
  v.mask_tail();
  return v;
}

/*! \brief All 2^num_terminals assignments; terminal t carries bit t of the pattern index. */
inline sim_vectors exhaustive_patterns( uint32_t num_terminals )
{
  assert( num_terminals <= 20u );
  sim_vectors v( num_terminals, 1u << num_terminals );
  static constexpr uint64_t proj[6] = { 0xaaaaaaaaaaaaaaaaull, 0xccccccccccccccccull,
                                        0xf0f0f0f0f0f0f0f0ull, 0xff00ff00ff00ff00ull,
                                        0xffff0000ffff0000ull, 0xffffffff00000000ull };
  for ( uint32_t t = 0; t < num_terminals; ++t )
    for ( uint32_t w = 0; w < v.words_per_terminal(); ++w )
      v.word( t, w ) = t < 6u ? proj[t] : ( ( w >> ( t - 6u ) ) & 1u ) ? ~0ull : 0ull;
  v.mask_tail();
  return v;
}

/*! \brief Evaluates all combinational outputs under the given CI patterns.
 *
 * Latches are cut points: their current-state values come from the patterns
 * (after the PIs) and their next-state functions appear after the POs.
 */
inline sim_vectors simulate( const aig_network& aig, const sim_vectors& ci_values )
{
  if ( ci_values.num_terminals() != aig.num_cis() )
    throw std::invalid_argument( "simulate: pattern terminal count does not match CI count" );

  uint32_t const wpt = ci_values.words_per_terminal();
  std::vector<uint64_t> values( size_t( aig.num_nodes() ) * wpt, 0ull );
  auto const at = [&]( node_index n, uint32_t w ) -> uint64_t& { return values[size_t( n ) * wpt + w]; };

  for ( uint32_t i = 0; i < aig.num_cis(); ++i )
    for ( uint32_t w = 0; w < wpt; ++w )
      at( aig.ci_node( i ), w ) = ci_values.word( i, w );

  for ( node_index n = aig.first_and(); n < aig.num_nodes(); ++n )
  {
    auto const& g = aig.gate( n );
    auto const n0 = lit_node( g.fanin0 );
    auto const n1 = lit_node( g.fanin1 );
    uint64_t const c0 = lit_complemented( g.fanin0 ) ? ~0ull : 0ull;
    uint64_t const c1 = lit_complemented( g.fanin1 ) ? ~0ull : 0ull;
    for ( uint32_t w = 0; w < wpt; ++w )
      at( n, w ) = ( at( n0, w ) ^ c0 ) & ( at( n1, w ) ^ c1 );
  }

  sim_vectors out( aig.num_cos(), ci_values.num_patterns() );
  for ( uint32_t i = 0; i < aig.num_cos(); ++i )
  {
    auto const l = aig.co( i );
    uint64_t const c = lit_complemented( l ) ? ~0ull : 0ull;
    for ( uint32_t w = 0; w < wpt; ++w )
      out.word( i, w ) = at( lit_node( l ), w ) ^ c;
  }
  out.mask_tail();
  return out;
}

} // namespace fusemap

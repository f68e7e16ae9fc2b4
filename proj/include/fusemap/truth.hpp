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
  \file truth.hpp
  \brief Small truth tables (up to 8 variables)

  Bit i of a table is the function value under the assignment where
  variable j takes bit j of i.
*/

#pragma once

#include <array>
#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

namespace fusemap
{

inline constexpr uint32_t truth_max_vars = 8u;

class truth_table
{
public:
  truth_table() = default;

  explicit truth_table( uint32_t num_vars ) : nv_( num_vars )
  {
    assert( num_vars <= truth_max_vars );
  }

  static truth_table constant( uint32_t num_vars, bool value )
  {
    truth_table t( num_vars );
    if ( value )
    {
      t.words_.fill( ~0ull );
      t.mask();
    }
    return t;
  }

  static truth_table nth_var( uint32_t num_vars, uint32_t var )
  {
    assert( var < num_vars );
    static constexpr std::array<uint64_t, 6> proj = {
        0xaaaaaaaaaaaaaaaaull, 0xccccccccccccccccull, 0xf0f0f0f0f0f0f0f0ull,
        0xff00ff00ff00ff00ull, 0xffff0000ffff0000ull, 0xffffffff00000000ull };
    truth_table t( num_vars );
    for ( uint32_t w = 0; w < t.num_words(); ++w )
    {
      t.words_[w] = var < 6u ? proj[var] : ( ( w >> ( var - 6u ) ) & 1u ) ? ~0ull : 0ull;
    }
    t.mask();
    return t;
  }

  uint32_t num_vars() const { return nv_; }
  uint32_t num_bits() const { return 1u << nv_; }
  uint32_t num_words() const { return nv_ <= 6u ? 1u : ( 1u << ( nv_ - 6u ) ); }

  uint64_t word( uint32_t w ) const { return words_[w]; }

  bool get_bit( uint32_t index ) const
  {
    assert( index < num_bits() );
    return ( words_[index >> 6u] >> ( index & 63u ) ) & 1u;
  }

  void set_bit( uint32_t index, bool value )
  {
    assert( index < num_bits() );
    if ( value )
      words_[index >> 6u] |= 1ull << ( index & 63u );
    else
      words_[index >> 6u] &= ~( 1ull << ( index & 63u ) );
  }

  bool is_constant( bool value ) const
  {
    truth_table ref = constant( nv_, value );
    return *this == ref;
  }

  uint32_t count_ones() const
  {
    uint32_t n = 0;
    for ( uint32_t w = 0; w < num_words(); ++w )
      n += static_cast<uint32_t>( __builtin_popcountll( words_[w] ) );
    return n;
  }

  truth_table operator~() const
  {
    truth_table t( nv_ );
    for ( uint32_t w = 0; w < num_words(); ++w )
      t.words_[w] = ~words_[w];
    t.mask();
    return t;
  }

  truth_table operator&( const truth_table& other ) const
  {
    assert( nv_ == other.nv_ );
    truth_table t( nv_ );
    for ( uint32_t w = 0; w < num_words(); ++w )
      t.words_[w] = words_[w] & other.words_[w];
    return t;
  }

  truth_table operator|( const truth_table& other ) const
  {
    assert( nv_ == other.nv_ );
    truth_table t( nv_ );
    for ( uint32_t w = 0; w < num_words(); ++w )
      t.words_[w] = words_[w] | other.words_[w];
    return t;
  }

  truth_table operator^( const truth_table& other ) const
  {
    assert( nv_ == other.nv_ );
    truth_table t( nv_ );
    for ( uint32_t w = 0; w < num_words(); ++w )
      t.words_[w] = words_[w] ^ other.words_[w];
    return t;
  }

  bool operator==( const truth_table& other ) const
  {
    if ( nv_ != other.nv_ )
      return false;
    for ( uint32_t w = 0; w < num_words(); ++w )
      if ( words_[w] != other.words_[w] )
        return false;
    return true;
  }

  bool operator!=( const truth_table& other ) const { return !( *this == other ); }

  bool operator<( const truth_table& other ) const
  {
    if ( nv_ != other.nv_ )
      return nv_ < other.nv_;
    for ( uint32_t w = num_words(); w-- > 0; )
      if ( words_[w] != other.words_[w] )
        return words_[w] < other.words_[w];
    return false;
  }

  std::string to_hex() const
  {
    static const char* digits = "0123456789abcdef";
    uint32_t nibbles = num_bits() <= 4u ? 1u : num_bits() / 4u;
    std::string s;
    for ( uint32_t i = nibbles; i-- > 0; )
    {
      s += digits[( words_[( i * 4u ) >> 6u] >> ( ( i * 4u ) & 63u ) ) & 0xfu];
    }
    return s;
  }

private:
  void mask()
  {
    if ( nv_ < 6u )
      words_[0] &= ( 1ull << num_bits() ) - 1u;
    for ( uint32_t w = num_words(); w < 4u; ++w )
      words_[w] = 0ull;
  }

  std::array<uint64_t, 4> words_{};
  uint32_t nv_ = 0;

  friend truth_table insert_variable( const truth_table&, uint32_t );
};

/*! \brief Inserts a don't-care variable at `position`, shifting higher variables up. */
inline truth_table insert_variable( const truth_table& t, uint32_t position )
{
  assert( position <= t.num_vars() );
  assert( t.num_vars() < truth_max_vars );
  truth_table r( t.num_vars() + 1u );
  if ( r.num_vars() <= 6u )
  {
    uint32_t const bs = 1u << position;
    uint32_t const nblocks = 1u << ( t.num_vars() - position );
    uint64_t const bmask = ( bs == 64u ) ? ~0ull : ( ( 1ull << bs ) - 1u );
    uint64_t src = t.word( 0 );
    uint64_t out = 0;
    for ( uint32_t b = 0; b < nblocks; ++b )
    {
      uint64_t const blk = ( src >> ( b * bs ) ) & bmask;
      out |= blk << ( 2u * b * bs );
      out |= blk << ( ( 2u * b + 1u ) * bs );
    }
    r.words_[0] = out;
    r.mask();
    return r;
  }
  for ( uint32_t i = 0; i < r.num_bits(); ++i )
  {
    uint32_t const low = i & ( ( 1u << position ) - 1u );
    uint32_t const high = ( i >> ( position + 1u ) ) << position;
    r.set_bit( i, t.get_bit( low | high ) );
  }
  return r;
}

/*! \brief Lifts a table over support `from` onto the superset support `to`.
 *
 * Both supports are strictly ascending and `from` must be a subsequence of `to`.
 */
inline truth_table lift_truth( const truth_table& t, const std::vector<uint32_t>& from,
                               const std::vector<uint32_t>& to )
{
  assert( from.size() == t.num_vars() );
  assert( from.size() <= to.size() );
  truth_table cur = t;
  size_t fi = 0;
  for ( size_t j = 0; j < to.size(); ++j )
  {
    if ( fi < from.size() && from[fi] == to[j] )
    {
      ++fi;
    }
    else
    {
      cur = insert_variable( cur, static_cast<uint32_t>( j ) );
    }
  }
  assert( fi == from.size() );
  return cur;
}

/*! \brief Reorders inputs: variable perm[v] of `t` is fed by variable v of the result. */
inline truth_table permute_inputs( const truth_table& t, const std::vector<uint32_t>& perm )
{
  assert( perm.size() == t.num_vars() );
  truth_table r( t.num_vars() );
  for ( uint32_t i = 0; i < t.num_bits(); ++i )
  {
    uint32_t src = 0;
    for ( uint32_t v = 0; v < t.num_vars(); ++v )
    {
      if ( ( i >> v ) & 1u )
        src |= 1u << perm[v];
    }
    r.set_bit( i, t.get_bit( src ) );
  }
  return r;
}

} // namespace fusemap

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
  \file aig.hpp
  \brief And-inverter graph with complemented edges

  Node 0 is the constant-false node.  Nodes 1..num_cis() are the combinational
  inputs (primary inputs followed by latch outputs); AND nodes follow in
  topological order, i.e. both fanins of a gate have strictly smaller indices.
  A literal is 2 * node + complement.  Latches are treated as combinational
  cut points: latch outputs behave as inputs and latch next-state functions as
  outputs for every analysis in this library.
*/

#pragma once

#include <cassert>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace fusemap
{

using node_index = uint32_t;
using literal = uint32_t;

inline constexpr literal lit_const0 = 0u;
inline constexpr literal lit_const1 = 1u;

inline node_index lit_node( literal l ) { return l >> 1u; }
inline bool lit_complemented( literal l ) { return ( l & 1u ) != 0u; }
inline literal make_literal( node_index n, bool complemented = false )
{
  return ( n << 1u ) | ( complemented ? 1u : 0u );
}
inline literal lit_not( literal l ) { return l ^ 1u; }
inline literal lit_not_if( literal l, bool c ) { return c ? l ^ 1u : l; }

class aig_network
{
public:
  struct and_gate
  {
    literal fanin0;
    literal fanin1;
  };

  std::string name = "aig";

  uint32_t num_pis() const { return num_pis_; }
  uint32_t num_latches() const { return num_latches_; }
  uint32_t num_cis() const { return num_pis_ + num_latches_; }
  uint32_t num_pos() const { return static_cast<uint32_t>( pos_.size() ); }
  uint32_t num_cos() const { return num_pos() + num_latches_; }
  uint32_t num_ands() const { return static_cast<uint32_t>( gates_.size() ); }
  uint32_t num_nodes() const { return 1u + num_cis() + num_ands(); }

  node_index first_and() const { return 1u + num_cis(); }
  bool is_constant( node_index n ) const { return n == 0u; }
  bool is_ci( node_index n ) const { return n >= 1u && n <= num_cis(); }
  bool is_pi( node_index n ) const { return n >= 1u && n <= num_pis_; }
  bool is_and( node_index n ) const { return n >= first_and() && n < num_nodes(); }

  node_index ci_node( uint32_t index ) const { return 1u + index; }
  uint32_t ci_index( node_index n ) const
  {
    assert( is_ci( n ) );
    return n - 1u;
  }

  const and_gate& gate( node_index n ) const
  {
    assert( is_and( n ) );
    return gates_[n - first_and()];
  }

  literal po( uint32_t index ) const { return pos_[index]; }
  literal latch_next( uint32_t index ) const { return latch_next_[index]; }

  /*! \brief Combinational output literal: POs first, then latch next-state functions. */
  literal co( uint32_t index ) const
  {
    return index < num_pos() ? pos_[index] : latch_next_[index - num_pos()];
  }

  const std::vector<and_gate>& gates() const { return gates_; }
  const std::vector<literal>& pos() const { return pos_; }
  const std::vector<literal>& latch_nexts() const { return latch_next_; }

  /*! \brief Number of fanout references per node (AND fanins plus CO bindings). */
  std::vector<uint32_t> fanout_counts() const;

  /*! \brief level(CI) = 0, level(v) = 1 + max(level(fanins)). */
  std::vector<uint32_t> levels() const;

private:
  uint32_t num_pis_ = 0;
  uint32_t num_latches_ = 0;
  std::vector<and_gate> gates_;
  std::vector<literal> pos_;
  std::vector<literal> latch_next_;

  friend class aig_builder;
};

/*! \brief Incremental AIG constructor with structural hashing.
 *
 * add_and applies the one-level rules (x&x = x, x&!x = 0, x&1 = x, x&0 = 0),
 * stores fanins smaller literal first and shares structurally identical
 * gates.  add_and_unhashed bypasses all of that and always creates a node.
 */
class aig_builder
{
public:
  explicit aig_builder( uint32_t num_pis, uint32_t num_latches = 0 )
  {
    g_.num_pis_ = num_pis;
    g_.num_latches_ = num_latches;
    g_.latch_next_.assign( num_latches, lit_const0 );
  }

  literal ci_literal( uint32_t index ) const
  {
    assert( index < g_.num_cis() );
    return make_literal( 1u + index );
  }

  literal pi_literal( uint32_t index ) const
  {
    assert( index < g_.num_pis() );
    return make_literal( 1u + index );
  }

  literal add_and( literal a, literal b )
  {
    check_literal( a );
    check_literal( b );
    if ( a > b )
      std::swap( a, b );
    if ( a == lit_const0 )
      return lit_const0;
    if ( a == lit_const1 )
      return b;
    if ( a == b )
      return a;
    if ( a == lit_not( b ) )
      return lit_const0;
    uint64_t const key = ( static_cast<uint64_t>( a ) << 32 ) | b;
    if ( auto it = table_.find( key ); it != table_.end() )
      return make_literal( it->second );
    node_index const n = g_.num_nodes();
    g_.gates_.push_back( { a, b } );
    table_.emplace( key, n );
    return make_literal( n );
  }

  literal add_and_unhashed( literal a, literal b )
  {
    check_literal( a );
    check_literal( b );
    node_index const n = g_.num_nodes();
    g_.gates_.push_back( { a, b } );
    return make_literal( n );
  }

  literal add_or( literal a, literal b ) { return lit_not( add_and( lit_not( a ), lit_not( b ) ) ); }
  literal add_xor( literal a, literal b )
  {
    return lit_not( add_and( lit_not( add_and( a, lit_not( b ) ) ), lit_not( add_and( lit_not( a ), b ) ) ) );
  }
  literal add_mux( literal sel, literal t, literal e )
  {
    return lit_not( add_and( lit_not( add_and( sel, t ) ), lit_not( add_and( lit_not( sel ), e ) ) ) );
  }
  literal add_maj( literal a, literal b, literal c )
  {
    return add_or( add_and( a, b ), add_or( add_and( a, c ), add_and( b, c ) ) );
  }

  void add_po( literal l )
  {
    check_literal( l );
    g_.pos_.push_back( l );
  }

  void set_latch_next( uint32_t index, literal l )
  {
    check_literal( l );
    g_.latch_next_[index] = l;
  }

  uint32_t num_ands() const { return g_.num_ands(); }

  aig_network build( std::string name = "aig" )
  {
    g_.name = std::move( name );
    return std::move( g_ );
  }

private:
  void check_literal( literal l ) const
  {
    assert( lit_node( l ) < g_.num_nodes() );
    (void)l;
  }

  aig_network g_;
  std::unordered_map<uint64_t, node_index> table_;
};

/*! \brief Structural hashing: rebuilds the CO-reachable part of the graph.
 *
 * Shares identical gates, applies the one-level rules, stores fanins in
 * canonical smaller-literal-first order and drops dangling nodes.  The
 * result is simulation-equivalent to the input and never larger.
 */
aig_network strash( const aig_network& aig );

/*! \brief AND-tree balancing.
 *
 * Every maximal conjunction (the cone reached through non-complemented AND
 * edges) is flattened and rebuilt as a minimum-depth tree, pairing the two
 * shallowest terms first.  Depth never increases; requires a hashed AIG.
 */
aig_network balance( const aig_network& aig );

struct size_depth
{
  uint64_t size;
  uint64_t depth;
};

/*! \brief AND-node count and maximum level over all combinational outputs. */
size_depth depth_and_size( const aig_network& aig );

} // namespace fusemap

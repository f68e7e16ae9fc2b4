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

#include "fusemap/aig.hpp"

#include <algorithm>
#include <queue>

namespace fusemap
{

std::vector<uint32_t> aig_network::fanout_counts() const
{
  std::vector<uint32_t> refs( num_nodes(), 0u );
  for ( uint32_t i = 0; i < num_ands(); ++i )
  {
    auto const& g = gates_[i];
    ++refs[lit_node( g.fanin0 )];
    ++refs[lit_node( g.fanin1 )];
  }
  for ( uint32_t i = 0; i < num_cos(); ++i )
    ++refs[lit_node( co( i ) )];
  return refs;
}

std::vector<uint32_t> aig_network::levels() const
{
  std::vector<uint32_t> level( num_nodes(), 0u );
  for ( node_index n = first_and(); n < num_nodes(); ++n )
  {
    auto const& g = gate( n );
    level[n] = 1u + std::max( level[lit_node( g.fanin0 )], level[lit_node( g.fanin1 )] );
  }
  return level;
}

size_depth depth_and_size( const aig_network& aig )
{
  auto const level = aig.levels();
  uint64_t depth = 0;
  for ( uint32_t i = 0; i < aig.num_cos(); ++i )
    depth = std::max<uint64_t>( depth, level[lit_node( aig.co( i ) )] );
  return { aig.num_ands(), depth };
}

namespace
{

std::vector<bool> co_reachable( const aig_network& aig )
{
  std::vector<bool> reach( aig.num_nodes(), false );
  for ( uint32_t i = 0; i < aig.num_cos(); ++i )
    reach[lit_node( aig.co( i ) )] = true;
  for ( node_index n = aig.num_nodes(); n-- > aig.first_and(); )
  {
    if ( !reach[n] )
      continue;
    auto const& g = aig.gate( n );
    reach[lit_node( g.fanin0 )] = true;
    reach[lit_node( g.fanin1 )] = true;
  }
  return reach;
}

} // namespace

aig_network strash( const aig_network& aig )
{
  aig_builder builder( aig.num_pis(), aig.num_latches() );
  auto const reach = co_reachable( aig );

  std::vector<literal> map( aig.num_nodes(), lit_const0 );
  for ( uint32_t i = 0; i < aig.num_cis(); ++i )
    map[aig.ci_node( i )] = builder.ci_literal( i );

  for ( node_index n = aig.first_and(); n < aig.num_nodes(); ++n )
  {
    if ( !reach[n] )
      continue;
    auto const& g = aig.gate( n );
    auto const a = lit_not_if( map[lit_node( g.fanin0 )], lit_complemented( g.fanin0 ) );
    auto const b = lit_not_if( map[lit_node( g.fanin1 )], lit_complemented( g.fanin1 ) );
    map[n] = builder.add_and( a, b );
  }

  for ( uint32_t i = 0; i < aig.num_pos(); ++i )
  {
    auto const l = aig.po( i );
    builder.add_po( lit_not_if( map[lit_node( l )], lit_complemented( l ) ) );
  }
  for ( uint32_t i = 0; i < aig.num_latches(); ++i )
  {
    auto const l = aig.latch_next( i );
    builder.set_latch_next( i, lit_not_if( map[lit_node( l )], lit_complemented( l ) ) );
  }
  return builder.build( aig.name );
}

namespace
{

struct balancer
{
  const aig_network& src;
  aig_builder builder;
  std::vector<literal> rebuilt;  // positive function of each source node in the new graph
  std::vector<uint32_t> level;   // per new-graph node

  static constexpr literal invalid = ~0u;

  explicit balancer( const aig_network& aig )
      : src( aig ), builder( aig.num_pis(), aig.num_latches() ),
        rebuilt( aig.num_nodes(), invalid ), level( 1u + aig.num_cis(), 0u )
  {
    rebuilt[0] = lit_const0;
    for ( uint32_t i = 0; i < aig.num_cis(); ++i )
      rebuilt[aig.ci_node( i )] = builder.ci_literal( i );
  }

  uint32_t lit_level( literal l ) const { return level[lit_node( l )]; }

  literal add_and_tracked( literal a, literal b )
  {
    auto const l = builder.add_and( a, b );
    auto const n = lit_node( l );
    if ( n >= level.size() )
    {
      assert( n == level.size() );
      level.push_back( 1u + std::max( lit_level( a ), lit_level( b ) ) );
    }
    return l;
  }

  /* Leaves of the maximal conjunction rooted at `n`: descends through
     non-complemented AND fanins, stops at complemented edges and CIs. */
  void collect_leaves( node_index n, std::vector<literal>& leaves ) const
  {
    auto const& g = src.gate( n );
    for ( auto const fi : { g.fanin0, g.fanin1 } )
    {
      auto const m = lit_node( fi );
      if ( !lit_complemented( fi ) && src.is_and( m ) )
        collect_leaves( m, leaves );
      else
        leaves.push_back( fi );
    }
  }

  literal build( node_index n )
  {
    if ( rebuilt[n] != invalid )
      return rebuilt[n];
    assert( src.is_and( n ) );

    std::vector<literal> leaves;
    collect_leaves( n, leaves );

    std::vector<literal> terms;
    terms.reserve( leaves.size() );
    for ( auto const l : leaves )
      terms.push_back( lit_not_if( build( lit_node( l ) ), lit_complemented( l ) ) );

    std::sort( terms.begin(), terms.end() );
    terms.erase( std::unique( terms.begin(), terms.end() ), terms.end() );
    for ( size_t i = 0; i + 1 < terms.size(); ++i )
    {
      if ( terms[i] == lit_not( terms[i + 1] ) )
        return rebuilt[n] = lit_const0;
    }
    if ( terms.front() == lit_const0 )
      return rebuilt[n] = lit_const0;
    if ( terms.front() == lit_const1 )
      terms.erase( terms.begin() );
    if ( terms.empty() )
      return rebuilt[n] = lit_const1;

    /* Min-depth combination: always pair the two shallowest terms. */
    auto const cmp = [this]( literal a, literal b ) {
      auto const la = lit_level( a ), lb = lit_level( b );
      return la != lb ? la > lb : a > b; // min-heap on (level, literal)
    };
    std::priority_queue<literal, std::vector<literal>, decltype( cmp )> heap( cmp, std::move( terms ) );
    while ( heap.size() > 1 )
    {
      auto const a = heap.top();
      heap.pop();
      auto const b = heap.top();
      heap.pop();
      heap.push( add_and_tracked( a, b ) );
    }
    return rebuilt[n] = heap.top();
  }
};

} // namespace

aig_network balance( const aig_network& aig )
{
  balancer b( aig );

  std::vector<literal> co_lits( aig.num_cos() );
  for ( uint32_t i = 0; i < aig.num_cos(); ++i )
  {
    auto const l = aig.co( i );
    co_lits[i] = lit_not_if( b.build( lit_node( l ) ), lit_complemented( l ) );
  }
  for ( uint32_t i = 0; i < aig.num_pos(); ++i )
    b.builder.add_po( co_lits[i] );
  for ( uint32_t i = 0; i < aig.num_latches(); ++i )
    b.builder.set_latch_next( i, co_lits[aig.num_pos() + i] );

  /* The builder shares gates but dangling copies of flattened interior
     nodes may remain referenced by nothing; strash drops them. */
  return strash( b.builder.build( aig.name ) );
}

} // namespace fusemap

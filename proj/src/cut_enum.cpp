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

#include "fusemap/cut_enum.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace fusemap
{

namespace
{

/* Sorted union of two leaf sets; false when the union exceeds k. */
bool merge_leaves( const std::vector<node_index>& a, const std::vector<node_index>& b,
                   uint32_t k, std::vector<node_index>& out )
{
  out.clear();
  size_t i = 0, j = 0;
  while ( i < a.size() || j < b.size() )
  {
    node_index next;
    if ( j >= b.size() || ( i < a.size() && a[i] < b[j] ) )
      next = a[i++];
    else if ( i >= a.size() || b[j] < a[i] )
      next = b[j++];
    else
    {
      next = a[i];
      ++i;
      ++j;
    }
    if ( out.size() >= k )
      return false;
    out.push_back( next );
  }
  return true;
}

uint64_t leaf_signature( const std::vector<node_index>& leaves )
{
  uint64_t s = 0;
  for ( auto const l : leaves )
    s |= 1ull << ( l & 63u );
  return s;
}

bool is_subset( const std::vector<node_index>& small, const std::vector<node_index>& big )
{
  size_t i = 0;
  for ( auto const x : big )
  {
    if ( i < small.size() && small[i] == x )
      ++i;
  }
  return i == small.size();
}

struct candidate
{
  std::vector<node_index> leaves;
  uint64_t signature;
  uint32_t delay;
  double flow;
  uint32_t from_a; // fanin cut indices, for deferred truth computation
  uint32_t from_b;
};

} // namespace

cut_database enumerate_cuts( const aig_network& aig, const cut_enum_params& params )
{
  if ( params.cut_size < 2u || params.cut_size > truth_max_vars )
    throw std::invalid_argument( "enumerate_cuts: cut_size must be in [2, 8]" );
  if ( params.cut_limit < 2u )
    throw std::invalid_argument( "enumerate_cuts: cut_limit must be at least 2" );

  cut_database db;
  db.cut_size = params.cut_size;
  db.sets.resize( aig.num_nodes() );
  db.label.assign( aig.num_nodes(), 0u );
  db.area_flow.assign( aig.num_nodes(), 0.0 );
  db.refs = aig.fanout_counts();

  auto make_trivial = []( node_index n, uint32_t delay, double flow ) {
    cut c;
    c.leaves = { n };
    c.function = truth_table::nth_var( 1u, 0u );
    c.delay = delay;
    c.flow = flow;
    return c;
  };

  for ( uint32_t i = 0; i < aig.num_cis(); ++i )
  {
    auto const n = aig.ci_node( i );
    db.sets[n].cuts.push_back( make_trivial( n, 0u, 0.0 ) );
  }

  std::vector<candidate> cand;
  std::vector<node_index> merged;

  for ( node_index n = aig.first_and(); n < aig.num_nodes(); ++n )
  {
    auto const& g = aig.gate( n );
    auto const n0 = lit_node( g.fanin0 );
    auto const n1 = lit_node( g.fanin1 );
    bool const c0 = lit_complemented( g.fanin0 );
    bool const c1 = lit_complemented( g.fanin1 );
    auto const& cuts_a = db.sets[n0].cuts;
    auto const& cuts_b = db.sets[n1].cuts;

    cand.clear();
    for ( uint32_t ai = 0; ai < cuts_a.size(); ++ai )
    {
      for ( uint32_t bi = 0; bi < cuts_b.size(); ++bi )
      {
        if ( !merge_leaves( cuts_a[ai].leaves, cuts_b[bi].leaves, params.cut_size, merged ) )
          continue;
        uint32_t d = 0;
        double f = 1.0;
        for ( auto const l : merged )
        {
          d = std::max( d, db.label[l] );
          f += db.area_flow[l];
        }
        cand.push_back( { merged, leaf_signature( merged ), d + 1u, f, ai, bi } );
      }
    }

    /* Exact dedup, then dominance: a cut whose leaves strictly include another
       candidate's leaves is dropped.  Both happen before capping. */
    std::sort( cand.begin(), cand.end(), []( const candidate& x, const candidate& y ) {
      return x.leaves.size() != y.leaves.size() ? x.leaves.size() < y.leaves.size()
                                                : x.leaves < y.leaves;
    } );
    cand.erase( std::unique( cand.begin(), cand.end(),
                             []( const candidate& x, const candidate& y ) { return x.leaves == y.leaves; } ),
                cand.end() );

    std::vector<candidate> kept;
    for ( auto& c : cand )
    {
      bool dominated = false;
      for ( auto const& k : kept )
      {
        if ( k.leaves.size() >= c.leaves.size() )
          continue;
        if ( ( k.signature & ~c.signature ) != 0u )
          continue;
        if ( is_subset( k.leaves, c.leaves ) )
        {
          dominated = true;
          break;
        }
      }
      if ( !dominated )
        kept.push_back( std::move( c ) );
    }

    std::sort( kept.begin(), kept.end(), []( const candidate& x, const candidate& y ) {
      if ( x.delay != y.delay )
        return x.delay < y.delay;
      if ( x.flow != y.flow )
        return x.flow < y.flow;
      return x.leaves < y.leaves;
    } );

    db.label[n] = kept.front().delay;
    double best_flow = kept.front().flow;
    for ( auto const& c : kept )
      best_flow = std::min( best_flow, c.flow );
    db.area_flow[n] = best_flow / std::max( 1u, db.refs[n] );

    if ( params.cut_limit != cut_enum_params::unlimited && kept.size() > params.cut_limit - 1u )
      kept.resize( params.cut_limit - 1u );

    auto& out = db.sets[n].cuts;
    out.clear();
    out.reserve( kept.size() + 1u );
    for ( auto& c : kept )
    {
      cut r;
      auto ta = lift_truth( cuts_a[c.from_a].function, cuts_a[c.from_a].leaves, c.leaves );
      auto tb = lift_truth( cuts_b[c.from_b].function, cuts_b[c.from_b].leaves, c.leaves );
      if ( c0 )
        ta = ~ta;
      if ( c1 )
        tb = ~tb;
      r.function = ta & tb;
      r.leaves = std::move( c.leaves );
      r.delay = c.delay;
      r.flow = c.flow;
      out.push_back( std::move( r ) );
    }
    out.push_back( make_trivial( n, db.label[n], db.area_flow[n] ) );
  }

  return db;
}

truth_table cut_truth( const aig_network& aig, node_index root, const std::vector<node_index>& leaves )
{
  auto const m = static_cast<uint32_t>( leaves.size() );
  if ( m > truth_max_vars )
    throw std::invalid_argument( "cut_truth: more than 8 leaves" );

  auto leaf_pos = [&]( node_index n ) -> int {
    auto const it = std::lower_bound( leaves.begin(), leaves.end(), n );
    if ( it != leaves.end() && *it == n )
      return static_cast<int>( it - leaves.begin() );
    return -1;
  };

  /* Collect the cone between root and leaves. */
  std::vector<node_index> cone;
  std::vector<node_index> stack{ root };
  std::unordered_set<node_index> visited;
  while ( !stack.empty() )
  {
    auto const n = stack.back();
    stack.pop_back();
    if ( leaf_pos( n ) >= 0 || !visited.insert( n ).second )
      continue;
    if ( !aig.is_and( n ) )
      throw std::invalid_argument( "cut_truth: leaf set is not a cut of the root" );
    auto const& g = aig.gate( n );
    cone.push_back( n );
    stack.push_back( lit_node( g.fanin0 ) );
    stack.push_back( lit_node( g.fanin1 ) );
  }
  std::sort( cone.begin(), cone.end() );

  std::unordered_map<node_index, truth_table> value;
  for ( uint32_t j = 0; j < m; ++j )
    value[leaves[j]] = truth_table::nth_var( m, j );

  auto fanin_value = [&]( literal l ) {
    auto t = value.at( lit_node( l ) );
    return lit_complemented( l ) ? ~t : t;
  };

  for ( auto const n : cone )
  {
    auto const& g = aig.gate( n );
    value[n] = fanin_value( g.fanin0 ) & fanin_value( g.fanin1 );
  }
  return value.at( root );
}

} // namespace fusemap

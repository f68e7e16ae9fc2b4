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

#include "fusemap/lut_map.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace fusemap
{

namespace
{

constexpr uint32_t req_inf = std::numeric_limits<uint32_t>::max();

struct mapper
{
  const aig_network& aig;
  const lut_map_params& params;
  cut_database db;

  std::vector<uint32_t> choice;    // chosen cut index per AND node
  std::vector<uint32_t> arrival;   // per node, under current choices
  std::vector<uint32_t> required;  // per node
  std::vector<uint32_t> map_refs;  // cover reference counts
  std::vector<double> est_refs;    // fanout estimates for area flow
  std::vector<double> node_flow;   // amortized area flow under current choices
  uint32_t target_depth = 0;

  struct cover_info
  {
    uint64_t num_lut = 0; // cones plus output adapters
    uint64_t depth = 0;
  };

  mapper( const aig_network& g, const lut_map_params& p )
      : aig( g ), params( p ), db( enumerate_cuts( g, { p.cut_size, p.cut_limit } ) )
  {
    choice.assign( aig.num_nodes(), 0u );
    arrival.assign( aig.num_nodes(), 0u );
    required.assign( aig.num_nodes(), req_inf );
    map_refs.assign( aig.num_nodes(), 0u );
    node_flow.assign( aig.num_nodes(), 0.0 );
    est_refs.assign( aig.num_nodes(), 1.0 );
    for ( node_index n = 0; n < aig.num_nodes(); ++n )
      est_refs[n] = std::max( 1u, db.refs[n] );
  }

  /* Selectable cuts exclude the trivial one (stored last). */
  uint32_t num_choices( node_index n ) const
  {
    return static_cast<uint32_t>( db.sets[n].cuts.size() ) - 1u;
  }
  const cut& cut_of( node_index n, uint32_t idx ) const { return db.sets[n].cuts[idx]; }
  const cut& chosen( node_index n ) const { return cut_of( n, choice[n] ); }

  uint32_t cut_arrival( const cut& c ) const
  {
    uint32_t a = 0;
    for ( auto const l : c.leaves )
      a = std::max( a, arrival[l] );
    return a + 1u;
  }

  double cut_flow( const cut& c ) const
  {
    double f = 1.0;
    for ( auto const l : c.leaves )
      f += node_flow[l];
    return f;
  }

  void delay_pass()
  {
    for ( node_index n = aig.first_and(); n < aig.num_nodes(); ++n )
    {
      uint32_t best = 0;
      uint32_t best_arr = 0;
      double best_flow = 0.0;
      for ( uint32_t i = 0; i < num_choices( n ); ++i )
      {
        auto const& c = cut_of( n, i );
        auto const arr = cut_arrival( c );
        auto const flow = cut_flow( c );
        if ( i == 0 || arr < best_arr ||
             ( arr == best_arr &&
               ( flow < best_flow ||
                 ( flow == best_flow && prefer_leaves( c, cut_of( n, best ) ) ) ) ) )
        {
          best = i;
          best_arr = arr;
          best_flow = flow;
        }
      }
      choice[n] = best;
      arrival[n] = best_arr;
      node_flow[n] = cut_flow( cut_of( n, best ) ) / est_refs[n];
      assert( best_arr == db.label[n] );
    }
    target_depth = 0;
    for ( uint32_t i = 0; i < aig.num_cos(); ++i )
    {
      auto const d = lit_node( aig.co( i ) );
      if ( aig.is_and( d ) )
        target_depth = std::max( target_depth, arrival[d] );
    }
  }

  static bool prefer_leaves( const cut& a, const cut& b )
  {
    if ( a.leaves.size() != b.leaves.size() )
      return a.leaves.size() < b.leaves.size();
    return a.leaves < b.leaves;
  }

  /* Required times over the current cover (must be extracted first). */
  void compute_required()
  {
    std::fill( required.begin(), required.end(), req_inf );
    for ( uint32_t i = 0; i < aig.num_cos(); ++i )
    {
      auto const d = lit_node( aig.co( i ) );
      if ( aig.is_and( d ) )
        required[d] = target_depth;
    }
    for ( node_index n = aig.num_nodes(); n-- > aig.first_and(); )
    {
      if ( map_refs[n] == 0u || required[n] == req_inf )
        continue;
      for ( auto const l : chosen( n ).leaves )
      {
        if ( aig.is_and( l ) )
          required[l] = std::min( required[l], required[n] - 1u );
      }
    }
  }

  /* Static arrival bound used for eligibility: labels are the fastest
     possible arrivals, so a cut that violates required under labels can
     never be part of a depth-preserving cover. */
  uint32_t cut_label_arrival( const cut& c ) const
  {
    uint32_t a = 0;
    for ( auto const l : c.leaves )
      a = std::max( a, db.label[l] );
    return a + 1u;
  }

  void area_flow_pass()
  {
    for ( node_index n = aig.first_and(); n < aig.num_nodes(); ++n )
    {
      int best = -1;
      uint32_t best_arr = 0;
      double best_flow = 0.0;
      uint32_t fastest = 0;
      uint32_t fastest_arr = req_inf;
      for ( uint32_t i = 0; i < num_choices( n ); ++i )
      {
        auto const& c = cut_of( n, i );
        auto const arr = cut_arrival( c );
        if ( arr < fastest_arr )
        {
          fastest = i;
          fastest_arr = arr;
        }
        if ( required[n] != req_inf && arr > required[n] )
          continue;
        auto const flow = cut_flow( c );
        if ( best < 0 || flow < best_flow || ( flow == best_flow && arr < best_arr ) ||
             ( flow == best_flow && arr == best_arr &&
               prefer_leaves( c, cut_of( n, static_cast<uint32_t>( best ) ) ) ) )
        {
          best = static_cast<int>( i );
          best_arr = arr;
          best_flow = flow;
        }
      }
      if ( best < 0 )
      {
        best = static_cast<int>( fastest );
        best_arr = fastest_arr;
      }
      choice[n] = static_cast<uint32_t>( best );
      arrival[n] = best_arr;
      node_flow[n] = cut_flow( chosen( n ) ) / est_refs[n];
    }
  }

  /* Exact-area refinement on the current cover, using reference counting. */
  uint64_t cone_ref( node_index n )
  {
    uint64_t area = 1;
    for ( auto const l : chosen( n ).leaves )
    {
      if ( aig.is_and( l ) && map_refs[l]++ == 0u )
        area += cone_ref( l );
    }
    return area;
  }

  uint64_t cone_deref( node_index n )
  {
    uint64_t area = 1;
    for ( auto const l : chosen( n ).leaves )
    {
      if ( aig.is_and( l ) && --map_refs[l] == 0u )
        area += cone_deref( l );
    }
    return area;
  }

  void exact_area_pass()
  {
    for ( node_index n = aig.first_and(); n < aig.num_nodes(); ++n )
    {
      if ( map_refs[n] == 0u )
        continue;
      auto const old_choice = choice[n];
      auto const old_area = cone_deref( n );
      uint32_t best = old_choice;
      uint64_t best_area = old_area;
      for ( uint32_t i = 0; i < num_choices( n ); ++i )
      {
        if ( i == old_choice )
          continue;
        auto const& c = cut_of( n, i );
        if ( required[n] != req_inf && cut_label_arrival( c ) > required[n] )
          continue;
        choice[n] = i;
        auto const area = cone_ref( n );
        cone_deref( n );
        if ( area < best_area )
        {
          best_area = area;
          best = i;
        }
      }
      choice[n] = best;
      cone_ref( n );
    }
  }

  /* Extracts the cover implied by the current choices: reference counts,
     cone count, and full metrics including output adapters. */
  cover_info extract()
  {
    std::fill( map_refs.begin(), map_refs.end(), 0u );
    std::vector<node_index> stack;
    for ( uint32_t i = 0; i < aig.num_cos(); ++i )
    {
      auto const d = lit_node( aig.co( i ) );
      if ( aig.is_and( d ) && map_refs[d]++ == 0u )
        stack.push_back( d );
    }
    uint64_t cones = 0;
    while ( !stack.empty() )
    {
      auto const n = stack.back();
      stack.pop_back();
      ++cones;
      for ( auto const l : chosen( n ).leaves )
      {
        if ( aig.is_and( l ) && map_refs[l]++ == 0u )
          stack.push_back( l );
      }
    }

    /* Cover levels. */
    std::vector<uint32_t> level( aig.num_nodes(), 0u );
    for ( node_index n = aig.first_and(); n < aig.num_nodes(); ++n )
    {
      if ( map_refs[n] == 0u )
        continue;
      uint32_t lv = 0;
      for ( auto const l : chosen( n ).leaves )
        lv = std::max( lv, level[l] );
      level[n] = lv + 1u;
    }

    /* Output adapters: a complemented CO on a cone whose positive phase is
       also used costs a duplicate cone; a complemented CO on a CI costs a
       1-input LUT.  Both are counted. */
    std::vector<uint8_t> pos_needed( aig.num_nodes(), 0u );
    std::vector<uint8_t> neg_needed( aig.num_nodes(), 0u );
    std::vector<uint8_t> ci_inverter( aig.num_nodes(), 0u );
    for ( node_index n = aig.first_and(); n < aig.num_nodes(); ++n )
    {
      if ( map_refs[n] == 0u )
        continue;
      for ( auto const l : chosen( n ).leaves )
        pos_needed[l] = 1u;
    }
    cover_info info;
    for ( uint32_t i = 0; i < aig.num_cos(); ++i )
    {
      auto const l = aig.co( i );
      auto const d = lit_node( l );
      if ( aig.is_and( d ) )
      {
        if ( lit_complemented( l ) )
          neg_needed[d] = 1u;
        else
          pos_needed[d] = 1u;
        info.depth = std::max<uint64_t>( info.depth, level[d] );
      }
      else if ( aig.is_ci( d ) && lit_complemented( l ) )
      {
        ci_inverter[d] = 1u;
        info.depth = std::max<uint64_t>( info.depth, 1u );
      }
    }
    uint64_t adapters = 0;
    for ( node_index n = 0; n < aig.num_nodes(); ++n )
    {
      if ( aig.is_and( n ) && neg_needed[n] && pos_needed[n] )
        ++adapters; // duplicated complemented cone
      if ( ci_inverter[n] )
        ++adapters;
    }
    info.num_lut = cones + adapters;
    return info;
  }
};

} // namespace

lut_netlist lut_map( const aig_network& aig, const lut_map_params& params, lut_map_stats* stats )
{
  mapper m( aig, params );

  m.delay_pass();
  auto best_choice = m.choice;
  auto info = m.extract();
  assert( info.depth == m.target_depth || m.target_depth == 0 );
  mapped_metrics best{ info.num_lut, info.depth, info.num_lut * info.depth };
  if ( stats )
    stats->passes.push_back( best );

  auto run_pass = [&]( auto&& body ) {
    body();
    auto const cand = m.extract();
    if ( cand.depth == best.depth && cand.num_lut <= best.num_lut )
    {
      best_choice = m.choice;
      best = { cand.num_lut, cand.depth, cand.num_lut * cand.depth };
    }
    else
    {
      m.choice = best_choice;
      m.extract();
    }
    for ( node_index n = 0; n < aig.num_nodes(); ++n )
      m.est_refs[n] = std::max( 1.0, ( m.est_refs[n] + 2.0 * m.map_refs[n] ) / 3.0 );
    if ( stats )
      stats->passes.push_back( best );
  };

  for ( uint32_t p = 0; p < params.area_flow_passes; ++p )
  {
    run_pass( [&] {
      m.compute_required();
      m.area_flow_pass();
    } );
  }
  for ( uint32_t p = 0; p < params.exact_area_passes; ++p )
  {
    run_pass( [&] {
      m.compute_required();
      m.exact_area_pass();
    } );
  }

  m.choice = best_choice;
  m.extract();

  /* Assemble the netlist. */
  lut_netlist net;
  net.model_name = aig.name;
  net.num_pis = aig.num_pis();
  net.num_latches = aig.num_latches();

  std::vector<uint8_t> pos_needed( aig.num_nodes(), 0u );
  std::vector<uint8_t> neg_needed( aig.num_nodes(), 0u );
  for ( node_index n = aig.first_and(); n < aig.num_nodes(); ++n )
  {
    if ( m.map_refs[n] == 0u )
      continue;
    for ( auto const l : m.chosen( n ).leaves )
      if ( aig.is_and( l ) )
        pos_needed[l] = 1u;
  }
  for ( uint32_t i = 0; i < aig.num_cos(); ++i )
  {
    auto const l = aig.co( i );
    auto const d = lit_node( l );
    if ( !aig.is_and( d ) )
      continue;
    ( lit_complemented( l ) ? neg_needed : pos_needed )[d] = 1u;
  }

  constexpr uint32_t none = std::numeric_limits<uint32_t>::max();
  std::vector<uint32_t> pos_gate( aig.num_nodes(), none );
  std::vector<uint32_t> neg_gate( aig.num_nodes(), none );

  for ( node_index n = aig.first_and(); n < aig.num_nodes(); ++n )
  {
    if ( m.map_refs[n] == 0u )
      continue;
    auto const& c = m.chosen( n );
    uint32_t level = 0;
    for ( auto const l : c.leaves )
    {
      if ( aig.is_and( l ) )
        level = std::max( level, net.gates[pos_gate[l]].level );
    }
    ++level;
    if ( pos_needed[n] || !neg_needed[n] )
    {
      pos_gate[n] = static_cast<uint32_t>( net.gates.size() );
      net.gates.push_back( { n, c.leaves, c.function, level } );
    }
    if ( neg_needed[n] )
    {
      neg_gate[n] = static_cast<uint32_t>( net.gates.size() );
      net.gates.push_back( { n, c.leaves, ~c.function, level } );
    }
  }

  /* 1-input inverter LUTs for complemented CI outputs, shared per CI. */
  std::vector<uint32_t> ci_inv( aig.num_nodes(), none );
  for ( uint32_t i = 0; i < aig.num_cos(); ++i )
  {
    auto const l = aig.co( i );
    auto const d = lit_node( l );
    output_binding bind;
    if ( aig.is_constant( d ) )
    {
      bind.source = lit_complemented( l ) ? output_binding::kind::constant1
                                          : output_binding::kind::constant0;
    }
    else if ( aig.is_ci( d ) )
    {
      if ( !lit_complemented( l ) )
      {
        bind.source = output_binding::kind::ci;
        bind.index = aig.ci_index( d );
      }
      else
      {
        if ( ci_inv[d] == none )
        {
          ci_inv[d] = static_cast<uint32_t>( net.gates.size() );
          net.gates.push_back( { d, { d }, ~truth_table::nth_var( 1u, 0u ), 1u } );
        }
        bind.source = output_binding::kind::gate;
        bind.index = ci_inv[d];
      }
    }
    else
    {
      bind.source = output_binding::kind::gate;
      bind.index = lit_complemented( l ) ? neg_gate[d] : pos_gate[d];
      assert( bind.index != none );
    }
    net.outputs.push_back( bind );
  }

  uint64_t depth = 0;
  for ( auto const& b : net.outputs )
  {
    if ( b.source == output_binding::kind::gate )
      depth = std::max<uint64_t>( depth, net.gates[b.index].level );
  }
  net.metrics.num_lut = net.gates.size();
  net.metrics.depth = depth;
  net.metrics.adp = net.metrics.num_lut * net.metrics.depth;
  return net;
}

} // namespace fusemap

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

#include "fusemap/blif.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include "fusemap/aiger.hpp"

namespace fusemap
{

std::vector<std::string> default_ci_names( uint32_t num_pis, uint32_t num_latches )
{
  std::vector<std::string> names;
  names.reserve( num_pis + num_latches );
  for ( uint32_t i = 0; i < num_pis; ++i )
    names.push_back( "x" + std::to_string( i ) );
  for ( uint32_t i = 0; i < num_latches; ++i )
    names.push_back( "lq" + std::to_string( i ) );
  return names;
}

std::vector<std::string> default_co_names( uint32_t num_pos, uint32_t num_latches )
{
  std::vector<std::string> names;
  names.reserve( num_pos + num_latches );
  for ( uint32_t i = 0; i < num_pos; ++i )
    names.push_back( "y" + std::to_string( i ) );
  for ( uint32_t i = 0; i < num_latches; ++i )
    names.push_back( "ld" + std::to_string( i ) );
  return names;
}

std::string write_blif_lut( const lut_netlist& netlist )
{
  auto const ci_names = default_ci_names( netlist.num_pis, netlist.num_latches );
  auto const co_names =
      default_co_names( static_cast<uint32_t>( netlist.outputs.size() ) - netlist.num_latches,
                        netlist.num_latches );

  /* A gate net takes the name of the first output it drives; other nets get
     internal names. */
  std::vector<std::string> gate_net( netlist.gates.size() );
  std::vector<int> gate_primary_co( netlist.gates.size(), -1 );
  for ( uint32_t i = 0; i < netlist.outputs.size(); ++i )
  {
    auto const& b = netlist.outputs[i];
    if ( b.source == output_binding::kind::gate && gate_primary_co[b.index] < 0 )
      gate_primary_co[b.index] = static_cast<int>( i );
  }
  for ( uint32_t g = 0; g < netlist.gates.size(); ++g )
  {
    gate_net[g] = gate_primary_co[g] >= 0 ? co_names[gate_primary_co[g]]
                                          : "n" + std::to_string( g );
  }

  /* Node-to-net mapping for leaves: CIs by name, AND roots by their positive gate. */
  std::unordered_map<node_index, std::string> node_net;
  for ( uint32_t g = 0; g < netlist.gates.size(); ++g )
  {
    auto const& gate = netlist.gates[g];
    // the first gate listed for a root is its positive cone (folded cones are
    // never referenced as leaves)
    if ( node_net.find( gate.root ) == node_net.end() )
      node_net[gate.root] = gate_net[g];
  }

  std::string out;
  out += ".model " + ( netlist.model_name.empty() ? std::string( "top" ) : netlist.model_name ) + "\n";
  out += ".inputs";
  for ( auto const& n : ci_names )
    out += " " + n;
  out += "\n.outputs";
  for ( auto const& n : co_names )
    out += " " + n;
  out += "\n";

  auto leaf_net = [&]( node_index leaf ) -> std::string {
    if ( leaf >= 1u && leaf <= netlist.num_cis() )
      return ci_names[leaf - 1u];
    return node_net.at( leaf );
  };

  for ( uint32_t g = 0; g < netlist.gates.size(); ++g )
  {
    auto const& gate = netlist.gates[g];
    out += ".names";
    for ( auto const leaf : gate.leaves )
      out += " " + leaf_net( leaf );
    out += " " + gate_net[g] + "\n";
    for ( uint32_t m = 0; m < gate.function.num_bits(); ++m )
    {
      if ( !gate.function.get_bit( m ) )
        continue;
      std::string row;
      for ( uint32_t v = 0; v < gate.function.num_vars(); ++v )
        row += ( ( m >> v ) & 1u ) ? '1' : '0';
      out += row + ( row.empty() ? "1" : " 1" ) + "\n";
    }
  }

  /* Outputs not directly named after a gate net: constants, CI wires, and
     additional outputs sharing an already-named gate. */
  for ( uint32_t i = 0; i < netlist.outputs.size(); ++i )
  {
    auto const& b = netlist.outputs[i];
    switch ( b.source )
    {
    case output_binding::kind::constant0:
      out += ".names " + co_names[i] + "\n";
      break;
    case output_binding::kind::constant1:
      out += ".names " + co_names[i] + "\n1\n";
      break;
    case output_binding::kind::ci:
      out += ".names " + ci_names[b.index] + " " + co_names[i] + "\n1 1\n";
      break;
    case output_binding::kind::gate:
      if ( gate_primary_co[b.index] != static_cast<int>( i ) )
        out += ".names " + gate_net[b.index] + " " + co_names[i] + "\n1 1\n";
      break;
    }
  }
  out += ".end\n";
  return out;
}

void write_blif_lut_file( const lut_netlist& netlist, const std::string& path )
{
  std::ofstream out( path, std::ios::binary );
  if ( !out )
    throw std::runtime_error( "cannot open '" + path + "' for writing" );
  out << write_blif_lut( netlist );
}

namespace
{

struct blif_block
{
  std::vector<std::string> inputs;
  std::string output;
  std::vector<std::string> rows; // cube strings over {0,1,-}
  char out_value = '1';
  uint32_t line = 0;
};

} // namespace

named_aig parse_blif( std::string_view text, const std::string& source_name )
{
  /* Tokenize into logical lines (handling '\' continuations and comments). */
  std::vector<std::pair<uint32_t, std::string>> lines;
  {
    std::string pending;
    uint32_t pending_line = 0;
    uint32_t line_no = 0;
    size_t pos = 0;
    while ( pos <= text.size() )
    {
      size_t end = text.find( '\n', pos );
      if ( end == std::string_view::npos )
        end = text.size();
      ++line_no;
      std::string line( text.substr( pos, end - pos ) );
      pos = end + 1;
      if ( !line.empty() && line.back() == '\r' )
        line.pop_back();
      if ( auto const hash = line.find( '#' ); hash != std::string::npos )
        line.resize( hash );
      bool const cont = !line.empty() && line.back() == '\\';
      if ( cont )
        line.pop_back();
      if ( pending.empty() )
        pending_line = line_no;
      pending += line;
      if ( cont )
      {
        pending += ' ';
        continue;
      }
      if ( pending.find_first_not_of( " \t" ) != std::string::npos )
        lines.emplace_back( pending_line, pending );
      pending.clear();
      if ( end == text.size() )
        break;
    }
  }

  auto tokens_of = []( const std::string& line ) {
    std::vector<std::string> toks;
    std::istringstream ss( line );
    std::string t;
    while ( ss >> t )
      toks.push_back( t );
    return toks;
  };

  std::string model_name = "blif";
  std::vector<std::string> inputs, outputs;
  std::vector<blif_block> blocks;

  for ( size_t li = 0; li < lines.size(); ++li )
  {
    auto const& [line_no, line] = lines[li];
    auto toks = tokens_of( line );
    if ( toks.empty() )
      continue;
    auto const& cmd = toks[0];
    if ( cmd == ".model" )
    {
      if ( toks.size() >= 2 )
        model_name = toks[1];
    }
    else if ( cmd == ".inputs" )
    {
      inputs.insert( inputs.end(), toks.begin() + 1, toks.end() );
    }
    else if ( cmd == ".outputs" )
    {
      outputs.insert( outputs.end(), toks.begin() + 1, toks.end() );
    }
    else if ( cmd == ".names" )
    {
      if ( toks.size() < 2 )
        throw parse_error( source_name, line_no, ".names needs at least an output signal" );
      blif_block b;
      b.inputs.assign( toks.begin() + 1, toks.end() - 1 );
      b.output = toks.back();
      b.line = line_no;
      /* Consume cube rows. */
      while ( li + 1 < lines.size() && lines[li + 1].second[lines[li + 1].second.find_first_not_of( " \t" )] != '.' )
      {
        auto rt = tokens_of( lines[++li].second );
        std::string cube, value;
        if ( b.inputs.empty() )
        {
          if ( rt.size() != 1 )
            throw parse_error( source_name, lines[li].first, "constant row must be a single value" );
          value = rt[0];
        }
        else
        {
          if ( rt.size() != 2 )
            throw parse_error( source_name, lines[li].first, "cube row must be '<cube> <value>'" );
          cube = rt[0];
          value = rt[1];
        }
        if ( value != "0" && value != "1" )
          throw parse_error( source_name, lines[li].first, "row value must be 0 or 1" );
        if ( cube.size() != b.inputs.size() )
          throw parse_error( source_name, lines[li].first, "cube width does not match input count" );
        for ( char const c : cube )
          if ( c != '0' && c != '1' && c != '-' )
            throw parse_error( source_name, lines[li].first, "cube characters must be 0, 1 or -" );
        if ( !b.rows.empty() && value[0] != b.out_value )
          throw parse_error( source_name, lines[li].first, "mixed ON-set and OFF-set rows" );
        b.out_value = value[0];
        b.rows.push_back( cube );
      }
      blocks.push_back( std::move( b ) );
    }
    else if ( cmd == ".end" )
    {
      break;
    }
    else if ( cmd == ".latch" || cmd == ".gate" || cmd == ".subckt" || cmd == ".mlatch" )
    {
      throw parse_error( source_name, line_no, "unsupported construct '" + cmd + "'" );
    }
    else
    {
      throw parse_error( source_name, line_no, "unknown construct '" + cmd + "'" );
    }
  }

  if ( inputs.empty() && outputs.empty() )
    throw parse_error( source_name, 1, "missing .inputs/.outputs" );

  /* Topologically order blocks (BLIF allows any order). */
  std::unordered_map<std::string, uint32_t> block_of; // output signal -> block idx
  for ( uint32_t i = 0; i < blocks.size(); ++i )
  {
    if ( !block_of.emplace( blocks[i].output, i ).second )
      throw parse_error( source_name, blocks[i].line, "signal '" + blocks[i].output + "' driven twice" );
  }
  std::unordered_map<std::string, literal> net;
  aig_builder builder( static_cast<uint32_t>( inputs.size() ) );
  for ( uint32_t i = 0; i < inputs.size(); ++i )
  {
    if ( !net.emplace( inputs[i], builder.pi_literal( i ) ).second )
      throw parse_error( source_name, 1, "duplicate input '" + inputs[i] + "'" );
    if ( block_of.count( inputs[i] ) )
      throw parse_error( source_name, blocks[block_of[inputs[i]]].line,
                         "signal '" + inputs[i] + "' is an input but has a driver" );
  }

  std::vector<uint8_t> state( blocks.size(), 0 ); // 0 new, 1 visiting, 2 done
  auto build_block = [&]( auto&& self, uint32_t bi ) -> void {
    if ( state[bi] == 2 )
      return;
    if ( state[bi] == 1 )
      throw parse_error( source_name, blocks[bi].line, "combinational cycle through '" +
                                                           blocks[bi].output + "'" );
    state[bi] = 1;
    auto const& b = blocks[bi];
    for ( auto const& in : b.inputs )
    {
      if ( net.count( in ) )
        continue;
      auto const it = block_of.find( in );
      if ( it == block_of.end() )
        throw parse_error( source_name, b.line, "undriven signal '" + in + "'" );
      self( self, it->second );
    }
    literal f = lit_const0;
    for ( auto const& cube : b.rows )
    {
      literal term = lit_const1;
      for ( size_t v = 0; v < cube.size(); ++v )
      {
        if ( cube[v] == '-' )
          continue;
        auto const l = net.at( b.inputs[v] );
        term = builder.add_and( term, cube[v] == '1' ? l : lit_not( l ) );
      }
      f = lit_not( builder.add_and( lit_not( f ), lit_not( term ) ) ); // OR
    }
    if ( b.rows.empty() )
      f = lit_const0;
    if ( b.out_value == '0' )
      f = lit_not( f );
    net[b.output] = f;
    state[bi] = 2;
  };

  for ( uint32_t i = 0; i < blocks.size(); ++i )
    build_block( build_block, i );

  for ( auto const& o : outputs )
  {
    auto const it = net.find( o );
    if ( it == net.end() )
      throw parse_error( source_name, 1, "output '" + o + "' has no driver" );
    builder.add_po( it->second );
  }

  named_aig result;
  result.aig = builder.build( model_name );
  result.ci_names = inputs;
  result.co_names = outputs;
  return result;
}

named_aig read_blif_file( const std::string& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
    throw std::runtime_error( "cannot open '" + path + "'" );
  std::stringstream ss;
  ss << in.rdbuf();
  auto const text = ss.str();
  return parse_blif( text, path );
}

} // namespace fusemap

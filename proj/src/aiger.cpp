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

#include "fusemap/aiger.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace fusemap
{

namespace
{

struct line_reader
{
  std::string_view text;
  size_t pos = 0;
  uint32_t line_no = 0;

  bool next( std::string_view& out )
  {
    if ( pos >= text.size() )
      return false;
    size_t end = text.find( '\n', pos );
    if ( end == std::string_view::npos )
      end = text.size();
    out = text.substr( pos, end - pos );
    if ( !out.empty() && out.back() == '\r' )
      out.remove_suffix( 1 );
    pos = end + 1;
    ++line_no;
    return true;
  }
};

std::vector<std::string_view> split_fields( std::string_view line )
{
  std::vector<std::string_view> fields;
  size_t i = 0;
  while ( i < line.size() )
  {
    while ( i < line.size() && line[i] == ' ' )
      ++i;
    size_t j = i;
    while ( j < line.size() && line[j] != ' ' )
      ++j;
    if ( j > i )
      fields.push_back( line.substr( i, j - i ) );
    i = j;
  }
  return fields;
}

bool parse_u32( std::string_view s, uint32_t& out )
{
  if ( s.empty() || s.size() > 10 )
    return false;
  uint64_t v = 0;
  for ( char const c : s )
  {
    if ( c < '0' || c > '9' )
      return false;
    v = v * 10u + static_cast<uint64_t>( c - '0' );
  }
  if ( v > 0xffffffffull )
    return false;
  out = static_cast<uint32_t>( v );
  return true;
}

} // namespace

aig_network parse_aiger( std::string_view text, const std::string& source_name )
{
  line_reader reader{ text };
  auto fail = [&]( const std::string& msg ) -> parse_error {
    return parse_error( source_name, reader.line_no, msg );
  };

  std::string_view line;
  if ( !reader.next( line ) )
    throw parse_error( source_name, 1, "empty document" );

  auto header = split_fields( line );
  if ( header.size() >= 1 && header[0] == "aig" )
    throw fail( "binary AIGER ('aig') is not supported; convert to ASCII 'aag'" );
  if ( header.size() != 6 || header[0] != "aag" )
    throw fail( "malformed header, expected 'aag M I L O A'" );

  uint32_t m, i_count, l_count, o_count, a_count;
  if ( !parse_u32( header[1], m ) || !parse_u32( header[2], i_count ) ||
       !parse_u32( header[3], l_count ) || !parse_u32( header[4], o_count ) ||
       !parse_u32( header[5], a_count ) )
    throw fail( "malformed header, expected 'aag M I L O A'" );
  if ( static_cast<uint64_t>( i_count ) + l_count + a_count > m )
    throw fail( "header: M smaller than I + L + A" );

  uint32_t const max_lit = 2u * m + 1u;
  std::vector<int64_t> var2node( m + 1u, -1 );
  var2node[0] = 0;

  aig_builder builder( i_count, l_count );

  auto read_data_line = [&]( const char* what ) -> std::vector<std::string_view> {
    std::string_view l;
    if ( !reader.next( l ) )
      throw fail( std::string( "unexpected end of file, expected " ) + what );
    auto fields = split_fields( l );
    if ( fields.empty() )
      throw fail( std::string( "blank line, expected " ) + what );
    return fields;
  };

  auto parse_lit = [&]( std::string_view s ) -> uint32_t {
    uint32_t v;
    if ( !parse_u32( s, v ) )
      throw fail( "expected a literal, got '" + std::string( s ) + "'" );
    if ( v > max_lit )
      throw fail( "literal " + std::string( s ) + " out of range (max " +
                  std::to_string( max_lit ) + ")" );
    return v;
  };

  for ( uint32_t i = 0; i < i_count; ++i )
  {
    auto fields = read_data_line( "an input literal" );
    if ( fields.size() != 1 )
      throw fail( "input line must contain exactly one literal" );
    auto const lit = parse_lit( fields[0] );
    if ( lit < 2u || ( lit & 1u ) )
      throw fail( "input literal must be an even non-constant literal" );
    if ( var2node[lit >> 1u] != -1 )
      throw fail( "variable " + std::to_string( lit >> 1u ) + " defined twice" );
    var2node[lit >> 1u] = 1 + i;
  }

  struct pending
  {
    uint32_t lit;
    uint32_t line;
  };
  std::vector<pending> latch_next( l_count );
  for ( uint32_t i = 0; i < l_count; ++i )
  {
    auto fields = read_data_line( "a latch definition" );
    if ( fields.size() != 2 && fields.size() != 3 )
      throw fail( "latch line must be 'current next' (optionally with reset 0)" );
    auto const cur = parse_lit( fields[0] );
    if ( cur < 2u || ( cur & 1u ) )
      throw fail( "latch literal must be an even non-constant literal" );
    if ( var2node[cur >> 1u] != -1 )
      throw fail( "variable " + std::to_string( cur >> 1u ) + " defined twice" );
    var2node[cur >> 1u] = 1 + i_count + i;
    latch_next[i] = { parse_lit( fields[1] ), reader.line_no };
    if ( fields.size() == 3 && fields[2] != "0" )
      throw fail( "only zero latch reset values are supported" );
  }

  std::vector<pending> outputs( o_count );
  for ( uint32_t i = 0; i < o_count; ++i )
  {
    auto fields = read_data_line( "an output literal" );
    if ( fields.size() != 1 )
      throw fail( "output line must contain exactly one literal" );
    outputs[i] = { parse_lit( fields[0] ), reader.line_no };
  }

  for ( uint32_t i = 0; i < a_count; ++i )
  {
    auto fields = read_data_line( "an AND definition" );
    if ( fields.size() != 3 )
      throw fail( "AND line must be 'lhs rhs0 rhs1'" );
    auto const lhs = parse_lit( fields[0] );
    if ( lhs < 2u || ( lhs & 1u ) )
      throw fail( "AND output literal must be an even non-constant literal" );
    if ( var2node[lhs >> 1u] != -1 )
      throw fail( "variable " + std::to_string( lhs >> 1u ) + " defined twice" );
    literal fanin[2];
    for ( int k = 0; k < 2; ++k )
    {
      auto const rhs = parse_lit( fields[1 + k] );
      auto const node = var2node[rhs >> 1u];
      if ( node < 0 )
        throw fail( "non-topological AND definition: variable " + std::to_string( rhs >> 1u ) +
                    " used before definition" );
      fanin[k] = make_literal( static_cast<node_index>( node ), ( rhs & 1u ) != 0u );
    }
    auto const lit = builder.add_and_unhashed( fanin[0], fanin[1] );
    var2node[lhs >> 1u] = lit_node( lit );
  }

  /* Optional symbol table and comment section. */
  std::string_view tail;
  while ( reader.next( tail ) )
  {
    if ( tail == "c" )
      break; // comment section: rest of the file is free-form
    if ( !tail.empty() && ( tail[0] == 'i' || tail[0] == 'l' || tail[0] == 'o' ) )
    {
      auto fields = split_fields( tail );
      uint32_t idx;
      if ( fields.size() >= 2 && parse_u32( fields[0].substr( 1 ), idx ) )
        continue; // symbol entry, ignored
    }
    throw fail( "trailing garbage after AND definitions" );
  }

  auto resolve = [&]( const pending& p ) -> literal {
    auto const node = var2node[p.lit >> 1u];
    if ( node < 0 )
      throw parse_error( source_name, p.line,
                         "literal " + std::to_string( p.lit ) + " references undefined variable" );
    return make_literal( static_cast<node_index>( node ), ( p.lit & 1u ) != 0u );
  };
  for ( auto const& p : outputs )
    builder.add_po( resolve( p ) );
  for ( uint32_t i = 0; i < l_count; ++i )
    builder.set_latch_next( i, resolve( latch_next[i] ) );

  return builder.build( source_name );
}

aig_network read_aiger_file( const std::string& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
    throw std::runtime_error( "cannot open '" + path + "'" );
  std::stringstream ss;
  ss << in.rdbuf();
  auto name = path;
  if ( auto const slash = name.find_last_of( "/\\" ); slash != std::string::npos )
    name = name.substr( slash + 1 );
  if ( auto const dot = name.find_last_of( '.' ); dot != std::string::npos && dot > 0 )
    name = name.substr( 0, dot );
  auto const text = ss.str();
  auto aig = parse_aiger( text, path );
  aig.name = name;
  return aig;
}

std::string write_aiger( const aig_network& aig )
{
  /* Compact variable numbering: PIs, latches, then ANDs in node order. */
  uint32_t const m = aig.num_cis() + aig.num_ands();
  std::string out;
  out += "aag " + std::to_string( m ) + ' ' + std::to_string( aig.num_pis() ) + ' ' +
         std::to_string( aig.num_latches() ) + ' ' + std::to_string( aig.num_pos() ) + ' ' +
         std::to_string( aig.num_ands() ) + '\n';

  auto to_file_lit = []( literal l ) { return l; }; // node numbering is already compact

  for ( uint32_t i = 0; i < aig.num_pis(); ++i )
    out += std::to_string( 2u * ( 1u + i ) ) + '\n';
  for ( uint32_t i = 0; i < aig.num_latches(); ++i )
  {
    out += std::to_string( 2u * ( 1u + aig.num_pis() + i ) ) + ' ' +
           std::to_string( to_file_lit( aig.latch_next( i ) ) ) + '\n';
  }
  for ( uint32_t i = 0; i < aig.num_pos(); ++i )
    out += std::to_string( to_file_lit( aig.po( i ) ) ) + '\n';
  for ( node_index n = aig.first_and(); n < aig.num_nodes(); ++n )
  {
    auto const& g = aig.gate( n );
    out += std::to_string( 2u * n ) + ' ' + std::to_string( to_file_lit( g.fanin0 ) ) + ' ' +
           std::to_string( to_file_lit( g.fanin1 ) ) + '\n';
  }
  return out;
}

void write_aiger_file( const aig_network& aig, const std::string& path )
{
  std::ofstream out( path, std::ios::binary );
  if ( !out )
    throw std::runtime_error( "cannot open '" + path + "' for writing" );
  out << write_aiger( aig );
}

} // namespace fusemap

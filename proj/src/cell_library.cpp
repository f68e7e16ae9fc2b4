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

#include "fusemap/cell_library.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include <openssl/evp.h>

#include "fusemap/aiger.hpp"

namespace fusemap
{

namespace
{

/* ------------------------------------------------------------------ */
/* Expression parsing                                                  */
/* ------------------------------------------------------------------ */

struct expr_node
{
  enum class op : uint8_t
  {
    pin,
    not_,
    and_,
    or_,
    const0,
    const1
  };
  op kind;
  uint32_t pin = 0;      // for pin
  int lhs = -1, rhs = -1; // children
};

struct expr_parser
{
  std::string_view text;
  size_t pos = 0;
  std::string source;
  uint32_t line;
  std::vector<std::string>& pins;
  std::vector<expr_node> nodes;

  [[noreturn]] void fail( const std::string& msg ) const
  {
    throw parse_error( source, line, msg );
  }

  void skip_ws()
  {
    while ( pos < text.size() && ( text[pos] == ' ' || text[pos] == '\t' ) )
      ++pos;
  }

  bool at_factor_start()
  {
    skip_ws();
    if ( pos >= text.size() )
      return false;
    char const c = text[pos];
    return c == '!' || c == '(' || isalnum( static_cast<unsigned char>( c ) ) || c == '_';
  }

  int parse_expr()
  {
    int lhs = parse_term();
    skip_ws();
    while ( pos < text.size() && text[pos] == '+' )
    {
      ++pos;
      int const rhs = parse_term();
      nodes.push_back( { expr_node::op::or_, 0, lhs, rhs } );
      lhs = static_cast<int>( nodes.size() ) - 1;
      skip_ws();
    }
    return lhs;
  }

  int parse_term()
  {
    int lhs = parse_factor();
    for ( ;; )
    {
      skip_ws();
      if ( pos < text.size() && text[pos] == '*' )
      {
        ++pos;
      }
      else if ( !at_factor_start() )
      {
        break;
      }
      int const rhs = parse_factor();
      nodes.push_back( { expr_node::op::and_, 0, lhs, rhs } );
      lhs = static_cast<int>( nodes.size() ) - 1;
    }
    return lhs;
  }

  int parse_factor()
  {
    skip_ws();
    if ( pos >= text.size() )
      fail( "unexpected end of expression" );
    char const c = text[pos];
    if ( c == '!' )
    {
      ++pos;
      int const child = parse_factor();
      nodes.push_back( { expr_node::op::not_, 0, child, -1 } );
      return static_cast<int>( nodes.size() ) - 1;
    }
    if ( c == '(' )
    {
      ++pos;
      int const inner = parse_expr();
      skip_ws();
      if ( pos >= text.size() || text[pos] != ')' )
        fail( "missing ')' in expression" );
      ++pos;
      return inner;
    }
    if ( isalnum( static_cast<unsigned char>( c ) ) || c == '_' )
    {
      size_t j = pos;
      while ( j < text.size() &&
              ( isalnum( static_cast<unsigned char>( text[j] ) ) || text[j] == '_' ) )
        ++j;
      std::string const ident( text.substr( pos, j - pos ) );
      pos = j;
      if ( ident == "CONST0" )
      {
        nodes.push_back( { expr_node::op::const0, 0, -1, -1 } );
        return static_cast<int>( nodes.size() ) - 1;
      }
      if ( ident == "CONST1" )
      {
        nodes.push_back( { expr_node::op::const1, 0, -1, -1 } );
        return static_cast<int>( nodes.size() ) - 1;
      }
      uint32_t pin;
      auto const it = std::find( pins.begin(), pins.end(), ident );
      if ( it == pins.end() )
      {
        pins.push_back( ident );
        pin = static_cast<uint32_t>( pins.size() ) - 1u;
      }
      else
      {
        pin = static_cast<uint32_t>( it - pins.begin() );
      }
      nodes.push_back( { expr_node::op::pin, pin, -1, -1 } );
      return static_cast<int>( nodes.size() ) - 1;
    }
    fail( std::string( "unexpected character '" ) + c + "' in expression" );
  }
};

truth_table eval_expr( const std::vector<expr_node>& nodes, int root, uint32_t num_pins )
{
  std::vector<truth_table> value( nodes.size() );
  for ( size_t i = 0; i < nodes.size(); ++i )
  {
    auto const& n = nodes[i];
    switch ( n.kind )
    {
    case expr_node::op::pin:
      value[i] = truth_table::nth_var( num_pins, n.pin );
      break;
    case expr_node::op::const0:
      value[i] = truth_table::constant( num_pins, false );
      break;
    case expr_node::op::const1:
      value[i] = truth_table::constant( num_pins, true );
      break;
    case expr_node::op::not_:
      value[i] = ~value[n.lhs];
      break;
    case expr_node::op::and_:
      value[i] = value[n.lhs] & value[n.rhs];
      break;
    case expr_node::op::or_:
      value[i] = value[n.lhs] | value[n.rhs];
      break;
    }
  }
  return value[root];
}

literal build_expr( const std::vector<expr_node>& nodes, int root, aig_builder& builder )
{
  std::vector<literal> value( nodes.size(), lit_const0 );
  for ( size_t i = 0; i < nodes.size(); ++i )
  {
    auto const& n = nodes[i];
    switch ( n.kind )
    {
    case expr_node::op::pin:
      value[i] = builder.pi_literal( n.pin );
      break;
    case expr_node::op::const0:
      value[i] = lit_const0;
      break;
    case expr_node::op::const1:
      value[i] = lit_const1;
      break;
    case expr_node::op::not_:
      value[i] = lit_not( value[n.lhs] );
      break;
    case expr_node::op::and_:
      value[i] = builder.add_and( value[n.lhs], value[n.rhs] );
      break;
    case expr_node::op::or_:
      value[i] = builder.add_or( value[n.lhs], value[n.rhs] );
      break;
    }
  }
  return value[root];
}

} // namespace

/* ------------------------------------------------------------------ */
/* Library                                                             */
/* ------------------------------------------------------------------ */

cell_library::cell_library( std::string id, std::vector<cell> cells )
    : id_( std::move( id ) ), cells_( std::move( cells ) )
{
  build_match_index();
  static const truth_table not_var = ~truth_table::nth_var( 1u, 0u );
  for ( uint32_t i = 0; i < num_cells(); ++i )
  {
    auto const& c = cells_[i];
    if ( c.arity() == 1u && c.function == not_var )
    {
      if ( !inverter_ || c.area < cells_[*inverter_].area )
        inverter_ = i;
    }
  }
}

void cell_library::build_match_index()
{
  for ( auto& m : index_ )
    m.clear();
  for ( uint32_t ci = 0; ci < num_cells(); ++ci )
  {
    auto const& c = cells_[ci];
    auto const m = c.arity();
    if ( m == 0 )
      continue;
    std::vector<uint32_t> perm( m );
    std::iota( perm.begin(), perm.end(), 0u );
    do
    {
      /* Key: the cut function seen when cut leaf j drives cell pin perm[j].
         permute_inputs feeds t's variable perm[v] with key variable v. */
      auto const key_tt = permute_inputs( c.function, perm );
      auto const key = key_tt.word( 0 );
      perm_match pm;
      pm.cell_index = ci;
      for ( uint32_t leaf = 0; leaf < m; ++leaf )
        pm.leaf_of_pin[perm[leaf]] = static_cast<uint8_t>( leaf );
      auto [it, inserted] = index_[m].emplace( key, pm );
      if ( !inserted )
      {
        auto const& prev = cells_[it->second.cell_index];
        if ( c.area < prev.area )
          it->second = pm;
      }
    } while ( std::next_permutation( perm.begin(), perm.end() ) );
  }
}

const perm_match* cell_library::match( const truth_table& function ) const
{
  auto const m = function.num_vars();
  if ( m > max_cell_arity )
    return nullptr;
  auto const it = index_[m].find( function.word( 0 ) );
  return it == index_[m].end() ? nullptr : &it->second;
}

int cell_library::find_cell( const std::string& name ) const
{
  for ( uint32_t i = 0; i < num_cells(); ++i )
    if ( cells_[i].name == name )
      return static_cast<int>( i );
  return -1;
}

/* ------------------------------------------------------------------ */
/* genlib parsing                                                      */
/* ------------------------------------------------------------------ */

cell_library parse_genlib( std::string_view text, const std::string& source_name )
{
  std::vector<cell> cells;
  uint32_t line_no = 0;
  size_t pos = 0;
  int current = -1; // cell receiving PIN lines

  while ( pos <= text.size() && pos < text.size() )
  {
    size_t end = text.find( '\n', pos );
    if ( end == std::string_view::npos )
      end = text.size();
    std::string line( text.substr( pos, end - pos ) );
    pos = end + 1;
    ++line_no;
    if ( !line.empty() && line.back() == '\r' )
      line.pop_back();
    if ( auto const hash = line.find( '#' ); hash != std::string::npos )
      line.resize( hash );
    std::istringstream ss( line );
    std::string head;
    if ( !( ss >> head ) )
      continue;

    if ( head == "GATE" )
    {
      std::string name, area_str;
      if ( !( ss >> name >> area_str ) )
        throw parse_error( source_name, line_no, "GATE line must be 'GATE <name> <area> <out>=<expr>;'" );
      double area;
      try
      {
        size_t used = 0;
        area = std::stod( area_str, &used );
        if ( used != area_str.size() )
          throw std::invalid_argument( "" );
      }
      catch ( ... )
      {
        throw parse_error( source_name, line_no, "invalid area '" + area_str + "'" );
      }
      if ( area < 0.0 )
        throw parse_error( source_name, line_no, "negative area" );

      std::string rest;
      std::getline( ss, rest );
      auto const eq = rest.find( '=' );
      auto const semi = rest.rfind( ';' );
      if ( eq == std::string::npos || semi == std::string::npos || semi < eq )
        throw parse_error( source_name, line_no, "GATE line must contain '<out>=<expr>;'" );
      std::string out_name = rest.substr( 0, eq );
      out_name.erase( std::remove_if( out_name.begin(), out_name.end(),
                                      []( char c ) { return c == ' ' || c == '\t'; } ),
                      out_name.end() );
      if ( out_name.empty() )
        throw parse_error( source_name, line_no, "missing output name before '='" );
      std::string const expr_text = rest.substr( eq + 1, semi - eq - 1 );

      cell c;
      c.name = name;
      c.area = area;
      expr_parser parser{ expr_text, 0, source_name, line_no, c.pins, {} };
      int const root = parser.parse_expr();
      parser.skip_ws();
      if ( parser.pos != expr_text.size() )
        throw parse_error( source_name, line_no, "trailing characters in expression" );

      if ( c.pins.size() > max_cell_arity )
        throw parse_error( source_name, line_no, "cell '" + name + "' has more than 6 inputs" );
      for ( auto const& existing : cells )
        if ( existing.name == name )
          throw parse_error( source_name, line_no, "duplicate cell name '" + name + "'" );

      c.function = eval_expr( parser.nodes, root, c.arity() );
      if ( c.pins.empty() && !c.function.is_constant( false ) && !c.function.is_constant( true ) )
        throw parse_error( source_name, line_no, "zero-input cell must be a constant" );
      if ( c.pins.empty() &&
           !( parser.nodes[root].kind == expr_node::op::const0 ||
              parser.nodes[root].kind == expr_node::op::const1 || parser.nodes.size() > 1 ) )
      {
        // fine: explicit CONST0/CONST1
      }

      /* Expansion template: expression tree as an AIG, hashed and balanced. */
      aig_builder builder( c.arity() );
      builder.add_po( build_expr( parser.nodes, root, builder ) );
      c.expansion = balance( strash( builder.build( name ) ) );
      c.orig_index = static_cast<uint32_t>( cells.size() );

      cells.push_back( std::move( c ) );
      current = static_cast<int>( cells.size() ) - 1;
    }
    else if ( head == "PIN" )
    {
      if ( current < 0 )
        throw parse_error( source_name, line_no, "PIN line before any GATE" );
      std::string pin_name, phase;
      double load, max_load, rise_block, rise_fanout, fall_block, fall_fanout;
      if ( !( ss >> pin_name >> phase >> load >> max_load >> rise_block >> rise_fanout >>
              fall_block >> fall_fanout ) )
        throw parse_error( source_name, line_no, "malformed PIN line" );
      if ( pin_name != "*" &&
           std::find( cells[current].pins.begin(), cells[current].pins.end(), pin_name ) ==
               cells[current].pins.end() )
        throw parse_error( source_name, line_no,
                           "PIN names unknown pin '" + pin_name + "'" );
      cells[current].delay = std::max( { cells[current].delay == 1.0 && rise_block >= 0.0
                                             ? std::max( rise_block, fall_block )
                                             : cells[current].delay,
                                         rise_block, fall_block } );
    }
    else
    {
      throw parse_error( source_name, line_no, "unknown statement '" + head + "'" );
    }
  }

  if ( cells.empty() )
    throw parse_error( source_name, line_no == 0 ? 1 : line_no, "library contains no GATE statements" );

  auto id = source_name;
  if ( auto const slash = id.find_last_of( "/\\" ); slash != std::string::npos )
    id = id.substr( slash + 1 );
  if ( auto const dot = id.find_last_of( '.' ); dot != std::string::npos && dot > 0 )
    id = id.substr( 0, dot );
  return cell_library( id, std::move( cells ) );
}

cell_library read_genlib_file( const std::string& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
    throw std::runtime_error( "cannot open '" + path + "'" );
  std::stringstream ss;
  ss << in.rdbuf();
  auto const text = ss.str();
  return parse_genlib( text, path );
}

/* ------------------------------------------------------------------ */
/* Subsets                                                             */
/* ------------------------------------------------------------------ */

subset_validity validate_subset( const cell_library& lib, const subset_selection& sel )
{
  static const truth_table not_var = ~truth_table::nth_var( 1u, 0u );
  static const truth_table and2 = truth_table::nth_var( 2u, 0u ) & truth_table::nth_var( 2u, 1u );
  const truth_table nand2 = ~and2;

  bool has_inverter = false;
  bool has_and = false;
  for ( uint32_t i = 0; i < lib.num_cells(); ++i )
  {
    if ( !sel.mask[i] )
      continue;
    auto const& c = lib.at( i );
    if ( c.arity() == 1u && c.function == not_var )
      has_inverter = true;
    if ( c.arity() == 2u && ( c.function == and2 || c.function == nand2 ) )
      has_and = true;
  }
  if ( !has_inverter )
    return { false, "no inverter cell" };
  if ( !has_and )
    return { false, "no AND-capable cell" };
  return { true, {} };
}

cell_library subset_library( const cell_library& lib, const subset_selection& sel )
{
  std::vector<cell> cells;
  for ( uint32_t i = 0; i < lib.num_cells(); ++i )
  {
    if ( sel.mask[i] )
      cells.push_back( lib.at( i ) ); // keeps orig_index
  }
  return cell_library( lib.id() + "-subset", std::move( cells ) );
}

std::string write_subset( const cell_library& lib, const subset_selection& sel )
{
  std::string hex;
  uint32_t const n = lib.num_cells();
  for ( uint32_t nib = ( n + 3u ) / 4u; nib-- > 0; )
  {
    uint32_t v = 0;
    for ( uint32_t b = 0; b < 4u; ++b )
    {
      uint32_t const bit = nib * 4u + b;
      if ( bit < n && sel.mask[bit] )
        v |= 1u << b;
    }
    hex += "0123456789abcdef"[v];
  }
  std::string out = "# mask 0x" + hex + "\n";
  for ( uint32_t i = 0; i < n; ++i )
  {
    if ( sel.mask[i] )
      out += lib.at( i ).name + "\n";
  }
  return out;
}

subset_selection parse_subset( const cell_library& lib, std::string_view text,
                               const std::string& source_name )
{
  subset_selection sel;
  sel.mask.assign( lib.num_cells(), 0u );
  uint32_t line_no = 0;
  size_t pos = 0;
  while ( pos < text.size() )
  {
    size_t end = text.find( '\n', pos );
    if ( end == std::string_view::npos )
      end = text.size();
    std::string line( text.substr( pos, end - pos ) );
    pos = end + 1;
    ++line_no;
    if ( !line.empty() && line.back() == '\r' )
      line.pop_back();
    auto const first = line.find_first_not_of( " \t" );
    if ( first == std::string::npos || line[first] == '#' )
      continue;
    auto const last = line.find_last_not_of( " \t" );
    auto const name = line.substr( first, last - first + 1 );
    auto const idx = lib.find_cell( name );
    if ( idx < 0 )
      throw parse_error( source_name, line_no, "unknown cell name '" + name + "'" );
    sel.mask[idx] = 1u;
  }
  sel.target_size = sel.popcount();
  return sel;
}

subset_selection read_subset_file( const cell_library& lib, const std::string& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
    throw std::runtime_error( "cannot open '" + path + "'" );
  std::stringstream ss;
  ss << in.rdbuf();
  auto const text = ss.str();
  return parse_subset( lib, text, path );
}

std::string subset_sha256( const cell_library& lib, const subset_selection& sel )
{
  std::vector<std::string> names;
  for ( uint32_t i = 0; i < lib.num_cells(); ++i )
    if ( sel.mask[i] )
      names.push_back( lib.at( i ).name );
  std::sort( names.begin(), names.end() );
  std::string blob;
  for ( auto const& n : names )
    blob += n + "\n";

  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest( blob.data(), blob.size(), digest, &len, EVP_sha256(), nullptr );
  std::string hex;
  for ( unsigned int i = 0; i < len; ++i )
  {
    hex += "0123456789abcdef"[digest[i] >> 4];
    hex += "0123456789abcdef"[digest[i] & 0xf];
  }
  return hex;
}

subset_selection full_selection( const cell_library& lib )
{
  subset_selection sel;
  sel.mask.assign( lib.num_cells(), 1u );
  sel.target_size = lib.num_cells();
  return sel;
}

} // namespace fusemap

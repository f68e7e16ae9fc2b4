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
  \file cell_library.hpp
  \brief Standard-cell library model: genlib-style parsing, permutation
         match index, per-cell AIG expansion templates, and subsets

  Matching is permutation-only on the input side: a cut function keys into
  the index directly or via its complement (output phase).  Input negations
  are never free; complemented edges are realized with explicit inverter
  instances by the cell mapper.
*/

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "aig.hpp"
#include "truth.hpp"

namespace fusemap
{

inline constexpr uint32_t max_cell_arity = 6u;

struct cell
{
  std::string name;
  std::vector<std::string> pins; // in order of first appearance in the expression
  double area = 0.0;
  double delay = 1.0;            // max block delay over PIN lines; reporting only
  truth_table function;          // over pins
  aig_network expansion;         // pins as PIs, single PO computing `function`
  uint32_t orig_index = 0;       // arm index in the library this cell was parsed into

  uint32_t arity() const { return static_cast<uint32_t>( pins.size() ); }
};

/*! \brief A permutation match: which cut leaf feeds each cell pin. */
struct perm_match
{
  uint32_t cell_index = 0;
  std::array<uint8_t, max_cell_arity> leaf_of_pin{}; // pin p is driven by leaf leaf_of_pin[p]
};

struct subset_selection
{
  std::vector<uint8_t> mask; // one entry per library cell
  uint32_t target_size = 0;

  uint32_t popcount() const
  {
    uint32_t n = 0;
    for ( auto const b : mask )
      n += b ? 1u : 0u;
    return n;
  }
  bool complete() const { return popcount() == target_size; }
};

struct subset_validity
{
  bool mappable = false;
  std::string reason; // set when unmappable
};

class cell_library
{
public:
  cell_library() = default;
  cell_library( std::string id, std::vector<cell> cells );

  const std::string& id() const { return id_; }
  uint32_t num_cells() const { return static_cast<uint32_t>( cells_.size() ); }
  const cell& at( uint32_t index ) const { return cells_[index]; }
  const std::vector<cell>& cells() const { return cells_; }

  /*! \brief Permutation lookup of a cut function (positive phase only). */
  const perm_match* match( const truth_table& function ) const;

  /*! \brief Index of the minimum-area inverter cell, if any. */
  std::optional<uint32_t> inverter() const { return inverter_; }

  int find_cell( const std::string& name ) const;

private:
  void build_match_index();

  std::string id_ = "lib";
  std::vector<cell> cells_;
  std::array<std::unordered_map<uint64_t, perm_match>, max_cell_arity + 1> index_;
  std::optional<uint32_t> inverter_;
};

/*! \brief Parses the genlib-style format.
 *
 * One cell per `GATE <name> <area> <out>=<expr>;` statement with optional
 * following PIN lines.  Expressions use ! (NOT), * or juxtaposition (AND),
 * + (OR), parentheses and CONST0/CONST1.  Errors carry line numbers.
 */
cell_library parse_genlib( std::string_view text, const std::string& source_name = "genlib" );

cell_library read_genlib_file( const std::string& path );

/*! \brief Mappability rule: an inverter plus an AND2- or NAND2-functioned cell.
 *
 * Sufficient for any AIG under this matcher; subsets failing the rule are
 * reported unmappable with a reason (a value, not an error).
 */
subset_validity validate_subset( const cell_library& lib, const subset_selection& sel );

/*! \brief Restriction to the selected cells; orig_index keeps the arm numbering. */
cell_library subset_library( const cell_library& lib, const subset_selection& sel );

/*! \brief Selected cell names, one per line, preceded by a hex mask comment. */
std::string write_subset( const cell_library& lib, const subset_selection& sel );
subset_selection parse_subset( const cell_library& lib, std::string_view text,
                               const std::string& source_name = "subset" );
subset_selection read_subset_file( const cell_library& lib, const std::string& path );

/*! \brief SHA-256 (hex) over the sorted selected-cell-name list, one name per line. */
std::string subset_sha256( const cell_library& lib, const subset_selection& sel );

subset_selection full_selection( const cell_library& lib );

} // namespace fusemap

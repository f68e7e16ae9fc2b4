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
  \file blif.hpp
  \brief BLIF writing for mapped netlists and a combinational `.names` reader

  `.names` rows list ON-set minterms.  The reader accepts `-` don't-cares and
  OFF-set rows and rebuilds the network as an AIG; `.latch`, `.gate` and other
  sequential constructs are rejected.
*/

#pragma once

#include <string>
#include <vector>

#include "aig.hpp"
#include "lut_map.hpp"

namespace fusemap
{

/*! \brief Positional terminal names: PIs x0.., latch outputs lq0.., POs y0.., latch inputs ld0... */
std::vector<std::string> default_ci_names( uint32_t num_pis, uint32_t num_latches );
std::vector<std::string> default_co_names( uint32_t num_pos, uint32_t num_latches );

std::string write_blif_lut( const lut_netlist& netlist );

void write_blif_lut_file( const lut_netlist& netlist, const std::string& path );

/*! \brief An AIG together with its terminal names, as read from or written to disk. */
struct named_aig
{
  aig_network aig;
  std::vector<std::string> ci_names;
  std::vector<std::string> co_names;
};

named_aig parse_blif( std::string_view text, const std::string& source_name = "blif" );

named_aig read_blif_file( const std::string& path );

} // namespace fusemap

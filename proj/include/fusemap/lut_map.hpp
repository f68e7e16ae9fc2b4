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
  \file lut_map.hpp
  \brief Depth-oriented K-LUT mapping with area recovery

  Pass 1 assigns every node its minimum arrival over the enumerated cuts;
  the mapped depth equals the minimum label over the output drivers, i.e.
  the mapping is depth-optimal for the enumerated cut space.  The following
  area-flow passes and the exact-area pass re-choose cuts among those that
  respect the required times; a pass result is only accepted when it keeps
  the depth and does not increase the LUT count, so the per-pass metrics are
  monotone.
*/

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aig.hpp"
#include "cut_enum.hpp"
#include "truth.hpp"

namespace fusemap
{

struct lut_map_params
{
  uint32_t cut_size = 6u;    // K, 2..8
  uint32_t cut_limit = 16u;
  uint32_t area_flow_passes = 2u;
  uint32_t exact_area_passes = 1u;
};

struct mapped_metrics
{
  uint64_t num_lut = 0;
  uint64_t depth = 0;
  uint64_t adp = 0; // num_lut * depth
};

/*! \brief One LUT: a chosen cone (or a 1-input output adapter on a CI). */
struct lut_gate
{
  node_index root;                 // source AIG node whose function (or complement) this LUT computes
  std::vector<node_index> leaves;  // cone inputs, ascending node indices
  truth_table function;
  uint32_t level = 0;
};

struct output_binding
{
  enum class kind : uint8_t
  {
    constant0,
    constant1,
    ci,   // wired straight to a combinational input, zero LUTs
    gate, // driven by gates[index]
  };
  kind source = kind::constant0;
  uint32_t index = 0; // CI index or gate index
};

/*! \brief Mapped LUT network.
 *
 * Complemented output edges are folded into the driving LUT's function; when
 * the positive phase of the same cone is also needed, a duplicate cone with
 * complemented function is emitted at the same level.  A complemented output
 * on a CI becomes an explicit 1-input LUT.  num_lut counts every gate in
 * `gates`; plain wires (outputs bound directly to a CI) and constants count
 * zero.
 */
struct lut_netlist
{
  std::string model_name;
  uint32_t num_pis = 0;
  uint32_t num_latches = 0;
  std::vector<lut_gate> gates; // topological: leaves of a gate precede it
  std::vector<output_binding> outputs;
  mapped_metrics metrics;

  uint32_t num_cis() const { return num_pis + num_latches; }
};

/*! \brief Per-pass metrics of the accepted mapping, in pass order. */
struct lut_map_stats
{
  std::vector<mapped_metrics> passes;
};

lut_netlist lut_map( const aig_network& aig, const lut_map_params& params = {},
                     lut_map_stats* stats = nullptr );

} // namespace fusemap

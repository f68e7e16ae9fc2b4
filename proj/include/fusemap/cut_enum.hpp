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
  \file cut_enum.hpp
  \brief Priority-cut enumeration with per-cut truth tables
*/

#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "aig.hpp"
#include "truth.hpp"

namespace fusemap
{

/*! \brief A K-feasible cut: sorted leaf set plus the local function over the leaves. */
struct cut
{
  std::vector<node_index> leaves; // strictly ascending
  truth_table function;           // bit i = root value when leaf j carries bit j of i
  uint32_t delay = 0;             // 1 + max leaf arrival (0 for the CI trivial cut)
  double flow = 0.0;              // 1 + sum of amortized leaf area flows

  bool trivial( node_index root ) const
  {
    return leaves.size() == 1 && leaves[0] == root;
  }
};

/*! \brief Per-node cut list, sorted by (delay, flow, lexicographic leaves); trivial cut last. */
struct cut_set
{
  std::vector<cut> cuts;
};

struct cut_enum_params
{
  uint32_t cut_size = 6u;                                     // K, 2..8
  uint32_t cut_limit = 16u;                                   // per-node cap
  static constexpr uint32_t unlimited = std::numeric_limits<uint32_t>::max();
};

/*! \brief Cut sets plus the per-node labels derived while enumerating. */
struct cut_database
{
  std::vector<cut_set> sets;      // per node; CIs hold only their trivial cut
  std::vector<uint32_t> label;    // minimum arrival over non-trivial cuts (CIs: 0)
  std::vector<double> area_flow;  // amortized best flow per node (CIs: 0)
  std::vector<uint32_t> refs;     // structural fanout counts
  uint32_t cut_size = 0;
};

/*! \brief Bottom-up cross-merge enumeration.
 *
 * Per AND node the fanin cut sets are cross-merged, filtered to at most
 * cut_size leaves, deduplicated, dominance-filtered (a cut whose leaves are a
 * superset of another's is dropped) and pruned to cut_limit with the
 * best-delay cut kept in front; the trivial cut is always appended.
 *
 * Throws std::invalid_argument when cut_size is outside [2, 8] or cut_limit
 * is below 2.
 */
cut_database enumerate_cuts( const aig_network& aig, const cut_enum_params& params = {} );

/*! \brief Recomputes a cut's function by simulating the cone under all leaf assignments.
 *
 * Independent of the incremental tables built during enumeration; throws
 * std::invalid_argument if the leaf set is not a cut of `root`.
 */
truth_table cut_truth( const aig_network& aig, node_index root, const std::vector<node_index>& leaves );

} // namespace fusemap

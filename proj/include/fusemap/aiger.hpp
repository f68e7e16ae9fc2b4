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
  \file aiger.hpp
  \brief ASCII AIGER (`aag`) reader and writer

  Only the ASCII format is accepted; the binary `aig` format is rejected with
  a clear error.  Symbol tables and comment sections are tolerated and
  ignored.  AND definitions must be topological: every fanin variable has to
  be defined on an earlier line.
*/

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "aig.hpp"

namespace fusemap
{

class parse_error : public std::runtime_error
{
public:
  parse_error( std::string source, uint32_t line, const std::string& what )
      : std::runtime_error( source + ":" + std::to_string( line ) + ": " + what ),
        source_( std::move( source ) ), line_( line )
  {
  }

  const std::string& source() const { return source_; }
  uint32_t line() const { return line_; }

private:
  std::string source_;
  uint32_t line_;
};

aig_network parse_aiger( std::string_view text, const std::string& source_name = "aiger" );

aig_network read_aiger_file( const std::string& path );

std::string write_aiger( const aig_network& aig );

void write_aiger_file( const aig_network& aig, const std::string& path );

} // namespace fusemap

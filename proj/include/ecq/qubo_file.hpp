#pragma once

#include <iosfwd>
#include <string>

#include "ecq/qubo.hpp"

namespace ecq {

/// QUBO text format:
///   c <comment>                                  (c format-version 1 first)
///   p qubo 0 <n> <nDiagonal> <nOffDiagonal>
///   i i <value>       one line per nonzero diagonal entry
///   i j <value>       one line per nonzero upper-triangle coupler, i < j,
///                     value = Q_ij + Q_ji
/// Values carry 17 significant digits so doubles round-trip exactly.
void write_qubo_file(std::ostream& out, const QuboMatrix& q);
std::string qubo_file_string(const QuboMatrix& q);

/// Inverse of write_qubo_file; couplers are split evenly across Q_ij and
/// Q_ji, which leaves every energy x'Qx unchanged.
QuboMatrix read_qubo_file(std::istream& in);
QuboMatrix parse_qubo_file(const std::string& text);

}  // namespace ecq

#pragma once

#include <cstdint>
#include <vector>

#include "linecong/p1split.hpp"

namespace linecong {

/// Splitting type from the minimal generators of the dual syzygy module
///   K_p = ker( sum S_{p-a_i} -> S_{p-m0} ),
/// which is the section module of the dual of the torsion-free cokernel.
/// Does not use gcds or Hilbert functions.
SplitResult oracle_splitting_type(const FormVector& v);

/// Generator degrees of K, ascending.
std::vector<std::int64_t> syzygy_generator_degrees(const FormVector& v);

/// Seeded random maps with at most 5 targets and twists <= 4, including zero
/// forms and forced common factors.  Never the zero map.
std::vector<FormVector> oracle_suite(std::uint64_t seed, int count);

}  // namespace linecong

#pragma once

#include <string>
#include <string_view>

#include "groupdet/group.hpp"

namespace groupdet {

GroupPtr cyclic(std::size_t n);
// Dihedral group of order n (n even): rotations r^i at index i, reflections s r^i at n/2 + i.
GroupPtr dihedral(std::size_t n);
// Permutations of {0..n-1} in lexicographic order, composed right to left.
GroupPtr symmetric(std::size_t n);
// Even permutations, in the same order.
GroupPtr alternating(std::size_t n);
// Dicyclic group of order n (n divisible by 4, n >= 8); Dic8 is isomorphic to Q8.
GroupPtr dicyclic(std::size_t n);
// Index order 1, -1, i, -i, j, -j, k, -k.
GroupPtr quaternion();
GroupPtr elementary_abelian(std::size_t p, std::size_t k);

// File format: first line N, then N rows of N 0-based indices, then an
// optional "labels:" line of N whitespace-separated names.
GroupPtr load_table_file(const std::string& path, const ValidationOptions& opts = {});

// expr := atom | atom "x" expr
// atom := C<n> | D<n> | S<n> | A<n> | Dic<n> | Q8 | E<p>^<k> | @<path>
GroupPtr build_group(std::string_view expr, const ValidationOptions& opts = {});

}  // namespace groupdet

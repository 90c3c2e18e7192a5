#ifndef BRAIDREP_TEXT_IO_HPP
#define BRAIDREP_TEXT_IO_HPP

#include <string>

#include "braidrep/group_ring.hpp"
#include "braidrep/representation.hpp"

namespace braidrep {

// Braid words: whitespace-separated `s<i>` tokens with an optional integer
// exponent (`s2^-1`, `s1^3`); free words use `g<i>`. The empty string is
// the identity.
BraidWord parse_braid_word(const std::string& text, int strands);
FreeWord parse_free_word(const std::string& text, int rank);
std::string format_braid_word(const BraidWord& w);
std::string format_free_word(const FreeWord& w);

// Group elements print in normal form, free part before braid part, e.g.
// "g2 s1"; the identity prints as "1".
std::string format_element(const SemidirectElement& g);
// Sums of polynomial-weighted elements, e.g. "s1 - g2 s1" or "1-q".
std::string format_group_ring(const GroupRingElement& e);

enum class MatrixFormat { Plain, Json, Latex };
MatrixFormat matrix_format_from_name(const std::string& name);

std::string format_matrix(const PolyMatrix& m, MatrixFormat fmt);
std::string format_matrix(const GroupRingMatrix& m, MatrixFormat fmt);

// Representation files are JSON documents:
//   { "format_version": 1,
//     "group": {"kind": "...", "n": ..., "m": ...},
//     "scalar_ring": ["s", "t"],
//     "dim": d,
//     "generators": {"s1": [["0","t"],["1","1-t"]], ...} }
// Printing and parsing round-trip bit-exactly.
std::string save_representation(const Representation& rho);
Representation load_representation(const std::string& text);

}  // namespace braidrep

#endif

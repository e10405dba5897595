#pragma once

// Published worked examples, embedded so that the fixture suite needs no
// external files. Matrices over labels 1..n unless noted; the five-vertex
// examples use labels a..e.

#include <array>
#include <string_view>
#include <vector>

#include "lcgf2/sym_matrix.hpp"

namespace lcgf2::fixtures {

/// Four 3x3 matrices; the modified inverses of each are the other three.
std::array<SymMatrix, 4> triangle_family();

/// Three 4x4 matrices with an asymmetric modified-inverse pattern.
std::array<SymMatrix, 3> four_vertex_family();
/// contains[i][j]: is matrix j a modified inverse of matrix i.
inline constexpr bool kFourVertexPattern[3][3] = {
    {false, true, true},
    {true, false, false},
    {true, false, true},
};

inline constexpr std::string_view kWordC = "abcdbcaeed";
/// C' = C # {c,e}; its word is abcbdeeadc.
inline constexpr std::string_view kWordCPrime = "abcbdeeadc";
inline constexpr std::string_view kPartitionP = "e,ade,abc,bcd";
/// As published the last circuit reads abcd, which needs a second d-a edge;
/// no partition of the graph realises it. abdc is the only reading whose
/// relative matrices are the published ones.
inline constexpr std::string_view kPartitionPPrimePublished = "aeed,bc,abcd";
inline constexpr std::string_view kPartitionPPrime = "aeed,bc,abdc";

Labels five_labels();  // a b c d e

SymMatrix rel_cprime_c();  // I_{C'}(C)
SymMatrix rel_c_cprime();  // I_C(C')
SymMatrix rel_p_c();       // I_P(C)
SymMatrix rel_p_cprime();  // I_P(C')
SymMatrix rel_pp_c();      // I_{P'}(C)
SymMatrix rel_pp_cprime(); // I_{P'}(C')

/// Relative core vectors as bit strings over a..e.
std::vector<std::string_view> core_p_c();
std::vector<std::string_view> core_p_cprime();
std::vector<std::string_view> core_pp_c();
std::vector<std::string_view> core_pp_cprime();

}  // namespace lcgf2::fixtures

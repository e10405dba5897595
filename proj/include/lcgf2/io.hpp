#pragma once

// Text, JSON and DOT serialization of matrices, vectors and graphs.
//
// Matrix text:   [labels: a b c]\n n\n row\n ... (rows of '0'/'1')
// Matrix JSON:   {"labels": [...], "rows": ["011", ...]}
// Graph JSON:    {"vertices": [...], "edges": [[s, t], ...],
//                 "transitions": [[[s, t], [u, w]], ...]}   (global slot ids)

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lcgf2/circuits.hpp"
#include "lcgf2/sym_matrix.hpp"

namespace lcgf2::io {

using nlohmann::json;

/// Throws InvalidInput, AsymmetricMatrix, DuplicateLabel.
SymMatrix parse_matrix_text(std::string_view text);
/// The labels header is written only when labels are not 1..n.
std::string format_matrix_text(const SymMatrix& m);

json matrix_to_json(const SymMatrix& m);
SymMatrix matrix_from_json(const json& j);

json vector_to_json(const Gf2Vector& v);
Gf2Vector vector_from_json(const json& j);

/// Text or JSON, detected by a leading '{'.
SymMatrix parse_matrix(std::string_view text);
/// A single matrix, {"matrices": [...]}, or text matrices separated by
/// blank lines.
std::vector<SymMatrix> parse_matrices(std::string_view text);

json partition_to_json(const CircuitPartition& p);
/// Rebuilds graph and transitions. Throws InvalidInput, InvalidGraph.
CircuitPartition partition_from_json(const json& j);

/// Undirected graph; a nonzero diagonal entry becomes a self-loop.
std::string to_dot(const SymMatrix& m, std::string_view name = "G");

/// Reads a file, or standard input for "-". Throws InvalidInput.
std::string read_source(const std::string& path);

}  // namespace lcgf2::io

#pragma once

#include "sqc/linalg.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace sqc {

/// The interchange format: {"n": int, "rows": [[...], ...], "name": "..."}
/// with numbers in decimal scientific notation.
struct MatrixDocument {
  int n = 0;
  Matrix rows;
  std::optional<std::string> name;
};

/// Throws InputError on malformed JSON, a missing field, ragged or
/// non-numeric rows, or n disagreeing with the row count.
MatrixDocument parse_matrix_document(const std::string &text);
MatrixDocument read_matrix_document(const std::string &path);

/// Entries use 17 significant digits so parsing restores them bit-exactly.
std::string format_matrix_document(const MatrixDocument &doc);

MatrixDocument to_document(const SymMatrix &a, std::optional<std::string> name = {});

/// Square, finite, symmetric within 1e-9 relative; symmetrized.
SymMatrix to_symmatrix(const MatrixDocument &doc);

/// FNV-1a 64 over n and the IEEE bit patterns of the entries (row-major).
std::uint64_t document_digest(const MatrixDocument &doc);

} // namespace sqc

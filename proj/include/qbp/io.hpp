#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "qbp/assembly.hpp"
#include "qbp/gf2.hpp"

namespace qbp {

struct ParseError : std::runtime_error {
    std::size_t position = 0;

    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
};

/// Standard alist text: `n m`, max column/row weights, per-column and
/// per-row weights, then 1-based index lists zero-padded to the max weight.
std::string export_alist(const SparseMatrix& h);
SparseMatrix import_alist(const std::string& text);

/// Matrix Market coordinate form, every entry 1.
std::string export_mtx(const SparseMatrix& h);
SparseMatrix import_mtx(const std::string& text);

/// Grammar: `rep:<L>` | `alist:<path>` | `random:<n>x<m>:<seed>`.
ClassicalCode parse_code_spec(const std::string& spec);

std::string read_file(const std::string& path);   // throws std::runtime_error
void write_file(const std::string& path, const std::string& text);

}  // namespace qbp

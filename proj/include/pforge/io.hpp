#pragma once

#include "pforge/construct.hpp"

#include <filesystem>

namespace pforge::io {

// Code file: "# perfect-forge code v1", a "q= p= k= n= count=" header
// line, then one word per line as space-separated element indices.
// Writers emit sorted order; readers accept any order and re-sort.
std::string code_to_string(const ExplicitCode& c);
ExplicitCode code_from_string(const std::string& text);

// Matrix file: same shape with "rows=" / "cols=" in the header.
std::string matrix_to_string(const FqMatrix& m);
FqMatrix matrix_from_string(const std::string& text);

// Implicit switched-code file: header, the parity-check matrix, then one
// section per component (coordinate, sigma table, shift word, basis).
std::string implicit_to_string(const ImplicitSwitchedCode& c);
ImplicitSwitchedCode implicit_from_string(const std::string& text);

bool looks_like_implicit(const std::string& text);
bool looks_like_code(const std::string& text);

std::string read_text(const std::filesystem::path& path);
// Writes via a temp file + rename so readers never observe partial output.
void write_text_atomic(const std::filesystem::path& path, const std::string& text);

void write_code(const std::filesystem::path& path, const ExplicitCode& c);
ExplicitCode read_code(const std::filesystem::path& path);
void write_matrix(const std::filesystem::path& path, const FqMatrix& m);
FqMatrix read_matrix(const std::filesystem::path& path);
void write_implicit(const std::filesystem::path& path, const ImplicitSwitchedCode& c);
ImplicitSwitchedCode read_implicit(const std::filesystem::path& path);

}  // namespace pforge::io

#pragma once

// JSON description of lower-triangular Toeplitz matrices:
//   {"p": 8, "poly": 285, "omega": 2, "n": 10, "exponents": [125, 35, ...]}
// with n - 1 exponents. A pair is a two-element array of such objects.

#include <filesystem>
#include <string>
#include <vector>

#include "srtz/toeplitz.hpp"

namespace srtz {

std::string to_json(const ToeplitzSpec& spec);
std::string to_json(const std::vector<ToeplitzSpec>& specs);

// Accepts a single object or an array of objects. Throws FormatError, or the
// field/root errors of the described parameters.
std::vector<ToeplitzSpec> parse_matrices(const std::string& text);

std::vector<ToeplitzSpec> read_matrices(const std::filesystem::path& path);
// Exactly one matrix. Throws FormatError otherwise.
ToeplitzSpec read_matrix(const std::filesystem::path& path);
void write_matrices(const std::filesystem::path& path, const std::vector<ToeplitzSpec>& specs);

} // namespace srtz

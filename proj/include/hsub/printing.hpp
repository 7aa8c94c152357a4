#pragma once

#include <string>

#include "hsub/operators.hpp"

namespace hsub {

enum class OpFormat { delta, symbol };

/// Polynomial in Delta rendered with the Unicode Delta sign, ascending
/// powers, e.g. "-1 - 1/2*Δ" or "Δ^2".
std::string delta_str(const Poly& p);

/// Operator matrix, one line per row, entries comma separated. The delta
/// format requires every entry to be a polynomial in z^{-1}.
std::string to_string(const DiffOp& op, OpFormat format);

}  // namespace hsub

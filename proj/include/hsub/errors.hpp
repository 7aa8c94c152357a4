#pragma once

#include <stdexcept>
#include <string>

namespace hsub {

// Malformed input files, rational strings, bad flag values.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Incompatible shapes passed to an operation.
struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Exact symbol division left a remainder; the factorization hypothesis
// behind the requested operation does not hold.
struct NotExactlyDivisible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularMatrix : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Linear constraints of a mask construction admit no solution.
struct InfeasibleConstruction : std::runtime_error {
    InfeasibleConstruction(const std::string& msg, int rank, int aug_rank)
        : std::runtime_error(msg), rank(rank), aug_rank(aug_rank) {}
    int rank;
    int aug_rank;  // deficiency = aug_rank - rank
};

// A mask fails the spectral condition at the order a chain requires.
struct SpectralOrderInsufficient : std::runtime_error {
    SpectralOrderInsufficient(const std::string& msg, int failed_order)
        : std::runtime_error(msg), failed_order(failed_order) {}
    int failed_order;
};

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace hsub

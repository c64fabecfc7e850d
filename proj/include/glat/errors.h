#pragma once

#include <stdexcept>
#include <string>

namespace glat {

// Misuse of an API contract (bad argument, wrong call order). A bug in the
// caller, not in the data.
struct ContractError : std::logic_error {
    explicit ContractError(const std::string& msg) : std::logic_error(msg) {}
};

// Tensor shapes do not conform for the requested operation.
struct DimensionError : ContractError {
    explicit DimensionError(const std::string& msg) : ContractError(msg) {}
};

// A sanctioned numeric operation produced NaN/Inf, or training diverged.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input files, corpora, or configs.
struct DataError : std::runtime_error {
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace glat

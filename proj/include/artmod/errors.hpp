#pragma once

#include <stdexcept>
#include <string>

namespace artmod {

// Error taxonomy mirrors the CLI exit-code contract:
//   ValidationError  -> exit 1 (bad input, broken invariant on user data)
//   ViolationError   -> exit 2 (a checked property fails, witness attached)
//   FalsificationError -> exit 3 (a certificate that encodes a proved
//                         statement failed; this means a bug, not bad input)

struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

struct SizeError : ValidationError {
    explicit SizeError(const std::string& what) : ValidationError(what) {}
};

struct ViolationError : std::runtime_error {
    std::string witness_json;  // serialized witness, printable by the CLI
    ViolationError(const std::string& what, std::string witness)
        : std::runtime_error(what), witness_json(std::move(witness)) {}
};

struct FalsificationError : std::runtime_error {
    explicit FalsificationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace artmod

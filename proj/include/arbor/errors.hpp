#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace arbor {

/// Domain error with a stable machine-readable kind. The CLI maps these to
/// structured error records and exit code 2; usage errors stay exit code 1.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& message) {
    throw DomainError(kind, message);
}

namespace errkind {
inline constexpr const char* too_large = "TooLarge";
inline constexpr const char* out_of_range = "OutOfRange";
inline constexpr const char* shape_mismatch = "ShapeMismatch";
inline constexpr const char* invalid_argument = "InvalidArgument";
inline constexpr const char* parse_error = "ParseError";
inline constexpr const char* not_tree_respecting = "NotTreeRespecting";
inline constexpr const char* not_pcf = "NotPCF";
inline constexpr const char* irrational_critical = "IrrationalCritical";
inline constexpr const char* degree_overflow = "DegreeOverflow";
inline constexpr const char* uncovered_case = "UncoveredCase";
inline constexpr const char* odd_parity = "OddParity";
inline constexpr const char* all_positive = "AllPositive";
inline constexpr const char* no_witness = "NoWitness";
inline constexpr const char* not_prime = "NotPrime";
inline constexpr const char* unknown_suite = "UnknownSuite";
}  // namespace errkind

}  // namespace arbor

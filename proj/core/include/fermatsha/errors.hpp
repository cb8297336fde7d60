#ifndef FERMATSHA_ERRORS_HPP
#define FERMATSHA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fermatsha {

// Error taxonomy. Everything user-recoverable derives from std::domain_error
// or std::invalid_argument; InternalError signals a broken invariant and maps
// to exit code 3 at the CLI boundary.

struct NotInvertible : std::domain_error {
    explicit NotInvertible(const std::string& msg) : std::domain_error(msg) {}
};

struct DivisibleByP : std::domain_error {
    explicit DivisibleByP(const std::string& msg) : std::domain_error(msg) {}
};

struct InvalidTriple : std::invalid_argument {
    explicit InvalidTriple(const std::string& msg) : std::invalid_argument(msg) {}
};

struct CapExceeded : std::domain_error {
    explicit CapExceeded(const std::string& msg) : std::domain_error(msg) {}
};

struct IrregularPrime : std::domain_error {
    explicit IrregularPrime(const std::string& msg) : std::domain_error(msg) {}
};

struct InvalidDimension : std::invalid_argument {
    explicit InvalidDimension(const std::string& msg) : std::invalid_argument(msg) {}
};

struct InternalError : std::logic_error {
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace fermatsha

#endif

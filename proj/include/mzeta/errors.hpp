#ifndef MZETA_ERRORS_HPP
#define MZETA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mzeta {

/// Base of all domain errors. `code()` is a stable machine-readable name;
/// the CLI maps these to exit status 1 (math/domain) or 2 (input syntax).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct ParseError : Error {
    ParseError(std::size_t pos, const std::string& msg)
        : Error("SyntaxError", msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
    std::size_t position;
};

struct ConstantTermError : Error {
    explicit ConstantTermError(const std::string& msg) : Error("ConstantTerm", msg) {}
};

struct ZeroPolynomialError : Error {
    explicit ZeroPolynomialError(const std::string& msg) : Error("ZeroPolynomial", msg) {}
};

struct NotDivisibleError : Error {
    explicit NotDivisibleError(int t_index)
        : Error("NotDivisible",
                "coefficient of T^" + std::to_string(t_index) + " is not divisible by (u - 1)"),
          index(t_index) {}
    int index;
};

struct UnsupportedGermError : Error {
    explicit UnsupportedGermError(const std::string& msg) : Error("UnsupportedGerm", msg) {}
};

struct DimensionUnsupportedError : Error {
    explicit DimensionUnsupportedError(const std::string& msg)
        : Error("DimensionUnsupported", msg) {}
};

struct DegenerateError : Error {
    explicit DegenerateError(const std::string& msg) : Error("Degenerate", msg) {}
};

struct InvalidDataError : Error {
    explicit InvalidDataError(const std::string& msg) : Error("InvalidData", msg) {}
};

struct MissingCoverDataError : Error {
    explicit MissingCoverDataError(const std::string& stratum)
        : Error("MissingCoverData", "stratum {" + stratum + "} has no sign-cover data") {}
};

struct UnsupportedCoverError : Error {
    explicit UnsupportedCoverError(const std::string& msg) : Error("UnsupportedCover", msg) {}
};

struct OrderMismatchError : Error {
    explicit OrderMismatchError(const std::string& msg) : Error("OrderMismatch", msg) {}
};

struct NoApplicableMethodError : Error {
    explicit NoApplicableMethodError(const std::string& msg)
        : Error("NoApplicableMethod", msg) {}
};

} // namespace mzeta

#endif

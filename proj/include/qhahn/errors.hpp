#pragma once

#include <stdexcept>
#include <string>

namespace qhahn {

// Base class for every error the library raises on bad input or violated
// preconditions. CLI maps these to exit code 2; failed mathematical checks
// (nonzero residual, Gram violation) are reported, not thrown, and map to 1.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class MixedContext : public Error {
public:
    explicit MixedContext(const std::string& msg) : Error("mixed field contexts: " + msg) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error("parse error: " + msg) {}
};

class PoleError : public Error {
public:
    explicit PoleError(const std::string& msg) : Error("evaluation at pole: " + msg) {}
};

// try_sqrt failed and the computation cannot continue without a root.
// Carries the radicand so callers can suggest the extension to adjoin.
class SqrtNotInField : public Error {
public:
    explicit SqrtNotInField(const std::string& radicand)
        : Error("square root not in field; adjoin " + radicand + " (--adjoin " + radicand + ")"),
          radicand_(radicand) {}
    const std::string& radicand() const { return radicand_; }

private:
    std::string radicand_;
};

class InvalidParam : public Error {
public:
    explicit InvalidParam(const std::string& msg) : Error(msg) {}
};

// A non-identically-zero factor of Z vanishes at the normalization point x=q
// and the deformation retry could not resolve it.
class NormalizationZero : public Error {
public:
    explicit NormalizationZero(const std::string& msg)
        : Error("zero-at-normalization-point: " + msg) {}
};

// V(1)=0 without the sigma==0 rule: the hypothesis of the factored
// construction fails and no sigma sequence is defined.
class HypothesisError : public Error {
public:
    explicit HypothesisError(const std::string& msg) : Error(msg) {}
};

// Strict mode only: Z(q^k)=0 for some k>=2 truncates the family.
class FiniteFamilyError : public Error {
public:
    explicit FiniteFamilyError(long k)
        : Error("alpha_" + std::to_string(k) +
                " = 0: finite family (strict mode rejects; rerun permissive)"),
          k_(k) {}
    long k() const { return k_; }

private:
    long k_;
};

class TruncationError : public Error {
public:
    explicit TruncationError(const std::string& msg)
        : Error("insufficient truncation: " + msg) {}
};

class VanishingG : public Error {
public:
    explicit VanishingG(long k)
        : Error("g(" + std::to_string(k) + ") = 0: initial-data formulas undefined") {}
};

}  // namespace qhahn

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace z4 {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller broke an operation's precondition (dimension mismatch, malformed value).
class ContractViolation : public Error {
public:
    using Error::Error;
};

/// An enumeration or sweep guard was exceeded.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

/// Input is well formed but outside what the operation supports.
class UnsupportedInput : public Error {
public:
    using Error::Error;
};

/// The form is degenerate where a nondegenerate one is required.
class DegenerateForm : public UnsupportedInput {
public:
    DegenerateForm() : UnsupportedInput("Brown invariant undefined: degenerate form") {}
    explicit DegenerateForm(const std::string& what) : UnsupportedInput(what) {}
};

/// Something that cannot happen for correct code did happen.
class InternalInconsistency : public Error {
public:
    using Error::Error;
};

/// Which precondition of isotropic reduction failed.
enum class SurgeryObstruction {
    ZeroClass,     // c = 0
    NonIsotropic,  // c.c = 1
    NonzeroValue,  // q(c) != 0
};

inline const char* describe(SurgeryObstruction why) {
    switch (why) {
        case SurgeryObstruction::ZeroClass: return "c = 0";
        case SurgeryObstruction::NonIsotropic: return "c·c != 0";
        case SurgeryObstruction::NonzeroValue: return "q(c) != 0";
    }
    return "unknown";
}

class SurgeryObstructed : public Error {
public:
    explicit SurgeryObstructed(SurgeryObstruction why)
        : Error(std::string("surgery obstructed: ") + describe(why)), reason_(why) {}

    [[nodiscard]] SurgeryObstruction reason() const noexcept { return reason_; }

private:
    SurgeryObstruction reason_;
};

/// An integer vector fails the characteristic (Wu) condition on basis vector `index`.
class NotCharacteristic : public Error {
public:
    NotCharacteristic(std::size_t index, long long c_dot_e, long long e_dot_e)
        : Error("not characteristic: c·e" + std::to_string(index) + " = " + std::to_string(c_dot_e) +
                " but e" + std::to_string(index) + "·e" + std::to_string(index) + " = " +
                std::to_string(e_dot_e) + " (mod 2 mismatch)"),
          index_(index) {}

    [[nodiscard]] std::size_t basis_index() const noexcept { return index_; }

private:
    std::size_t index_;
};

}  // namespace z4

#pragma once

#include <stdexcept>
#include <string>

namespace harmcont {

enum class Err {
    InvalidArgument,
    InvalidConfig,
    MissingData,
    IllPosedStep,
    WrongBackend,
    BudgetExceeded,
    NumericFailure,
    SingularSystem,
    SingularInterior,
    InternalError,
    ParseError,
};

inline const char* err_name(Err e) {
    switch (e) {
        case Err::InvalidArgument:  return "invalid-argument";
        case Err::InvalidConfig:    return "invalid-config";
        case Err::MissingData:      return "missing-data";
        case Err::IllPosedStep:     return "ill-posed-step";
        case Err::WrongBackend:     return "wrong-backend";
        case Err::BudgetExceeded:   return "budget-exceeded";
        case Err::NumericFailure:   return "numeric-failure";
        case Err::SingularSystem:   return "singular-system";
        case Err::SingularInterior: return "singular-interior";
        case Err::InternalError:    return "internal-error";
        case Err::ParseError:       return "parse-error";
    }
    return "unknown-error";
}

class Error : public std::runtime_error {
public:
    Error(Err kind, const std::string& msg)
        : std::runtime_error(std::string(err_name(kind)) + ": " + msg), kind_(kind) {}

    Err kind() const { return kind_; }

private:
    Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& msg) { throw Error(kind, msg); }

inline void require(bool cond, Err kind, const std::string& msg) {
    if (!cond) fail(kind, msg);
}

}  // namespace harmcont

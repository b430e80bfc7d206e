#pragma once

#include <stdexcept>
#include <string>

namespace oramsey {

enum class ErrorCode {
    LoopEdge,
    DuplicateEdge,
    UnknownVertex,
    IllegalBuilderMove,
    CorruptTrace,
    PlanDesync,
    ContractViolation,
    TargetTooSmall,
    UnsupportedTarget,
    StateTooLarge,
    BudgetTooLarge,
    TooLarge,
    BadTableFile,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

} // namespace oramsey

#pragma once

#include <stdexcept>
#include <string>

namespace pmf {

enum class Err {
    MalformedRotation,
    EulerViolation,
    NegativeLength,
    ConservationViolation,
    InfeasibleInput,
    NegativeScalar,
    NonIntegralValue,
    NoCycle,
    UnboundedFlow,
    Infeasible,
    StageFailure,
    ExtensionFailure,
    PathNotFound,
    NotAcyclic,
    WrongTerminalCount,
    NoSaddle,
    DegenerateDerivative,
    FixupShortfall,
    ParseError,
    ValidationError,
    ParamError,
    Overflow,
    Internal,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& msg);
    Err code() const { return code_; }

private:
    Err code_;
};

[[noreturn]] void fail(Err code, const std::string& msg);

// Always-on cheap internal consistency check.
inline void internal_check(bool cond, const char* what) {
    if (!cond) fail(Err::Internal, what);
}

// Expensive invariant checks (the lemma chains) are gated on this flag.
// Controlled by the PMF_CHECKS environment variable; defaults to on.
bool strict_checks();
void set_strict_checks(bool on);

} // namespace pmf

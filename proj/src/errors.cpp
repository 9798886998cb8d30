#include "pmf/errors.hpp"

#include <cstdlib>

namespace pmf {

const char* err_name(Err e) {
    switch (e) {
        case Err::MalformedRotation:     return "MalformedRotation";
        case Err::EulerViolation:        return "EulerViolation";
        case Err::NegativeLength:        return "NegativeLength";
        case Err::ConservationViolation: return "ConservationViolation";
        case Err::InfeasibleInput:       return "InfeasibleInput";
        case Err::NegativeScalar:        return "NegativeScalar";
        case Err::NonIntegralValue:      return "NonIntegralValue";
        case Err::NoCycle:               return "NoCycle";
        case Err::UnboundedFlow:         return "UnboundedFlow";
        case Err::Infeasible:            return "Infeasible";
        case Err::StageFailure:          return "StageFailure";
        case Err::ExtensionFailure:      return "ExtensionFailure";
        case Err::PathNotFound:          return "PathNotFound";
        case Err::NotAcyclic:            return "NotAcyclic";
        case Err::WrongTerminalCount:    return "WrongTerminalCount";
        case Err::NoSaddle:              return "NoSaddle";
        case Err::DegenerateDerivative:  return "DegenerateDerivative";
        case Err::FixupShortfall:        return "FixupShortfall";
        case Err::ParseError:            return "ParseError";
        case Err::ValidationError:       return "ValidationError";
        case Err::ParamError:            return "ParamError";
        case Err::Overflow:              return "Overflow";
        case Err::Internal:              return "Internal";
    }
    return "Unknown";
}

Error::Error(Err code, const std::string& msg)
    : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}

void fail(Err code, const std::string& msg) { throw Error(code, msg); }

namespace {
int strict_state() {
    static int state = [] {
        const char* v = std::getenv("PMF_CHECKS");
        if (v == nullptr) return 1;
        return (v[0] == '0') ? 0 : 1;
    }();
    return state;
}
int strict_override = -1;
} // namespace

bool strict_checks() {
    if (strict_override >= 0) return strict_override != 0;
    return strict_state() != 0;
}

void set_strict_checks(bool on) { strict_override = on ? 1 : 0; }

} // namespace pmf

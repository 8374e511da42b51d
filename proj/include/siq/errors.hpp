#pragma once

#include <stdexcept>
#include <string>

namespace siq {

/// Base class for every error condition raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define SIQ_DEFINE_ERROR(Name)                                        \
    struct Name : Error {                                             \
        explicit Name(const std::string& what) : Error(what) {}       \
    }

// numerics
SIQ_DEFINE_ERROR(NoSignChange);
SIQ_DEFINE_ERROR(MaxIterations);
SIQ_DEFINE_ERROR(NegativeIntegrand);
SIQ_DEFINE_ERROR(NonConvergence);
SIQ_DEFINE_ERROR(DimensionMismatch);

// integrals
SIQ_DEFINE_ERROR(DomainViolation);

// catalog
SIQ_DEFINE_ERROR(OutOfDomain);
SIQ_DEFINE_ERROR(ParamViolation);
SIQ_DEFINE_ERROR(Overflow);

// quantizers
SIQ_DEFINE_ERROR(NoTurningPoint);
SIQ_DEFINE_ERROR(Unbound);
SIQ_DEFINE_ERROR(ZeroEnergy);

// oracle
SIQ_DEFINE_ERROR(GridTooSmall);

#undef SIQ_DEFINE_ERROR

}  // namespace siq

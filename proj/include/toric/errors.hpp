#pragma once

#include <stdexcept>
#include <string>

namespace toric {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define TORIC_DEFINE_ERROR(Name, Base)                                         \
    class Name : public Base {                                                 \
    public:                                                                    \
        using Base::Base;                                                      \
    }

// exact arithmetic
TORIC_DEFINE_ERROR(DimensionMismatch, Error);
TORIC_DEFINE_ERROR(PoleError, Error);
TORIC_DEFINE_ERROR(DivisionByZero, Error);
TORIC_DEFINE_ERROR(ParseError, Error);

// geometry / blending
TORIC_DEFINE_ERROR(NotFullDimensional, Error);
TORIC_DEFINE_ERROR(PointOutsidePolytope, Error);
TORIC_DEFINE_ERROR(InvalidWeights, Error);

// toric fiber products
TORIC_DEFINE_ERROR(DependentDegrees, Error);
TORIC_DEFINE_ERROR(NoOmega, Error);
TORIC_DEFINE_ERROR(NoDegreeMap, Error);
TORIC_DEFINE_ERROR(EmptyDegreeClass, Error);
TORIC_DEFINE_ERROR(NotAFace, Error);

// horn pairs
TORIC_DEFINE_ERROR(ZeroToNegativePower, Error);
TORIC_DEFINE_ERROR(InconsistentBlockIndex, Error);
TORIC_DEFINE_ERROR(MergeAborted, Error);
TORIC_DEFINE_ERROR(InvalidHornMatrix, Error);

// mle
TORIC_DEFINE_ERROR(ZeroClassTotal, Error);
TORIC_DEFINE_ERROR(NotConverged, Error);
TORIC_DEFINE_ERROR(DomainError, Error);
TORIC_DEFINE_ERROR(NonGenericData, DomainError);

// io
TORIC_DEFINE_ERROR(SchemaError, Error);
TORIC_DEFINE_ERROR(IoError, Error);

#undef TORIC_DEFINE_ERROR

} // namespace toric

#pragma once

#include <stdexcept>
#include <string>

namespace oih {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define OIH_ERROR(Name)                                          \
    struct Name : Error {                                        \
        explicit Name(const std::string& what) : Error(what) {}  \
    }

OIH_ERROR(NonDivisible);
OIH_ERROR(SingularAtOrigin);
OIH_ERROR(WidthMismatch);
OIH_ERROR(SummandMismatch);
OIH_ERROR(ZeroModule);
OIH_ERROR(ZeroElement);
OIH_ERROR(NotAnIdeal);
OIH_ERROR(NotInLanguage);
OIH_ERROR(InvalidInput);
OIH_ERROR(InternalError);
OIH_ERROR(NoStableFit);
OIH_ERROR(NotConformant);
OIH_ERROR(Column1NotEmpty);

#undef OIH_ERROR

}  // namespace oih

#pragma once

#include <stdexcept>
#include <string>

namespace plumbing {

// Every library failure carries a short machine-readable code next to the
// human-readable message; the CLI forwards both.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define PLUMBING_DEFINE_ERROR(Name)                                         \
    class Name : public Error {                                             \
    public:                                                                 \
        explicit Name(const std::string& what) : Error(#Name, what) {}      \
    };

PLUMBING_DEFINE_ERROR(NonDynkinShape)
PLUMBING_DEFINE_ERROR(DuplicateEdge)
PLUMBING_DEFINE_ERROR(OrientationNotPhiCompatible)
PLUMBING_DEFINE_ERROR(ConventionFailure)
PLUMBING_DEFINE_ERROR(ZeroDegreeCycle)
PLUMBING_DEFINE_ERROR(NotComposable)
PLUMBING_DEFINE_ERROR(NonHomogeneous)
PLUMBING_DEFINE_ERROR(NotAUPath)
PLUMBING_DEFINE_ERROR(UnsupportedShape)
PLUMBING_DEFINE_ERROR(DegreeMismatch)
PLUMBING_DEFINE_ERROR(NotTypeA)
PLUMBING_DEFINE_ERROR(OutOfWindow)
PLUMBING_DEFINE_ERROR(ParseError)

#undef PLUMBING_DEFINE_ERROR

} // namespace plumbing

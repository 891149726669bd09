#pragma once

#include <stdexcept>
#include <string>

namespace zitterlab {

// Base class for all recoverable library errors. Subtypes exist so callers
// can react to individual failure modes without string matching.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define ZITTERLAB_DEFINE_ERROR(Name)                                      \
    struct Name : Error {                                                 \
        explicit Name(const std::string& msg) : Error(msg) {}             \
    }

ZITTERLAB_DEFINE_ERROR(NotHermitian);
ZITTERLAB_DEFINE_ERROR(BadNormalization);
ZITTERLAB_DEFINE_ERROR(SingularH);
ZITTERLAB_DEFINE_ERROR(GridTooCoarse);
ZITTERLAB_DEFINE_ERROR(TooLarge);
ZITTERLAB_DEFINE_ERROR(NoPeak);
ZITTERLAB_DEFINE_ERROR(TooManyModes);
ZITTERLAB_DEFINE_ERROR(JointTooLarge);
ZITTERLAB_DEFINE_ERROR(NoStructure);
ZITTERLAB_DEFINE_ERROR(NonPositiveRadius);
ZITTERLAB_DEFINE_ERROR(NotSState);
ZITTERLAB_DEFINE_ERROR(UnsupportedDimension);
ZITTERLAB_DEFINE_ERROR(EmptyData);
ZITTERLAB_DEFINE_ERROR(ConfigInvalid);

#undef ZITTERLAB_DEFINE_ERROR

}  // namespace zitterlab

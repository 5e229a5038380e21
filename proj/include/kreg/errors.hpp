#ifndef KREG_ERRORS_HPP
#define KREG_ERRORS_HPP

#include <stdexcept>

namespace kreg {

/// An internal consistency check failed. This signals a bug in the library
/// (or corrupted input data bypassing validation), never a user error.
class SoundnessError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A requested Gram matrix exceeds the configured size limit.
class SizeLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace kreg

#endif

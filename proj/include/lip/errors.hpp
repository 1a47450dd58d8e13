#ifndef LIP_ERRORS_HPP
#define LIP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lip {

/// File or stream level failure (missing file, malformed header,
/// truncated payload). Distinct from std::domain_error, which signals
/// a violated mathematical precondition.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace lip

#endif

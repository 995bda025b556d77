#ifndef EXOTIC_ERRORS_HPP
#define EXOTIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace exotic {

/// Raised when an internal cross-check fails: the inputs were valid but two
/// routes that must agree did not. Never a user error.
class consistency_error : public std::logic_error {
public:
    explicit consistency_error(const std::string& what)
        : std::logic_error("consistency check failed: " + what)
    {
    }
};

} // namespace exotic

#endif

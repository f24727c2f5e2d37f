#ifndef WDELTA_ERROR_HPP
#define WDELTA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace wdelta {

// All hard failures carry a machine-parsable kind tag; verification
// outcomes (pass/fail/skip) are reported through Report, not thrown.
class error : public std::runtime_error {
public:
    error(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

} // namespace wdelta

#endif

#pragma once

#include <stdexcept>
#include <string>

namespace otrid {

enum class Errc {
    parse = 1,      // malformed text / JSON
    invalid = 2,    // structural validation failed
    domain = 3,     // arguments outside the declared domain (bad index, mismatch)
    limit = 4,      // resource guard tripped
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

}  // namespace otrid

#pragma once

#include <stdexcept>
#include <string>

namespace coideal {

// Every failure the library reports carries a stable kind string so the CLI
// and the tests can match on it without parsing messages.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

}  // namespace coideal

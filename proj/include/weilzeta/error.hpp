#pragma once

#include <stdexcept>
#include <string>

namespace weilzeta {

/// Raised for rejected inputs and for computations that cannot certify an answer.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace weilzeta

#pragma once

#include <stdexcept>

namespace hookimm {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SizeLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace hookimm

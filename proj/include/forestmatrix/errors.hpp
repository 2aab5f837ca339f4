#pragma once

#include <stdexcept>
#include <string>

namespace forestmatrix {

/// Bad input: invalid sizes, malformed graphs, out-of-domain indices.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Work refused because it would exceed a hard resource cap.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace forestmatrix

#pragma once

#include <stdexcept>
#include <string>

namespace wordlab {

/// File or stream could not be read or written.
class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A word list produced no usable words.
class EmptyLexiconError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed experiment configuration or CSV input.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace wordlab

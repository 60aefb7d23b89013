#pragma once

#include <stdexcept>
#include <string>

namespace compsem {

// Base of every error raised by the library. The CLI maps all of these to
// exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input: type notation, tensor files, lexicon lines.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Missing or invalid configuration, e.g. a basic type without a dimension.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class SizeLimitError : public Error {
 public:
  using Error::Error;
};

class UnknownWordError : public Error {
 public:
  explicit UnknownWordError(const std::string& word)
      : Error("unknown word: '" + word + "'"), word_(word) {}
  const std::string& word() const noexcept { return word_; }

 private:
  std::string word_;
};

// Zero vectors where a direction is required (cosine, similarity).
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace compsem

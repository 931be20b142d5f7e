#pragma once

#include <stdexcept>
#include <string>

namespace solvcore {

// Word uses a generator outside the declared alphabet, or two words from
// different alphabets were combined.
class AlphabetError : public std::invalid_argument {
 public:
  explicit AlphabetError(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed group descriptor or word text. Carries the offset of the first
// offending character.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Query combination the library does not implement.
class UnsupportedError : public std::runtime_error {
 public:
  explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

// A computed witness failed its mandatory check. Always a bug, never an answer.
class VerificationError : public std::logic_error {
 public:
  explicit VerificationError(const std::string& what) : std::logic_error(what) {}
};

// Preimage requested for a matrix outside the embedding's image.
class NotInImageError : public std::invalid_argument {
 public:
  explicit NotInImageError(const std::string& what) : std::invalid_argument(what) {}
};

// Conjugator lifting ran out of budget while the decision procedure says the
// elements are conjugate. Soundness is preserved by failing loudly.
class LiftBudgetError : public std::runtime_error {
 public:
  explicit LiftBudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Finite enumeration would exceed the configured size bound.
class SizeExceededError : public std::runtime_error {
 public:
  explicit SizeExceededError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace solvcore

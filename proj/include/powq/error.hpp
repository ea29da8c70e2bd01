#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace powq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A multiplication table or catalog request that does not describe a group.
class GroupError : public Error {
 public:
  enum class Kind { NotAssociative, NoIdentity, NoInverse, BadTable };

  GroupError(Kind kind, std::vector<std::size_t> witness, const std::string& what)
      : Error(what), kind_(kind), witness_(std::move(witness)) {}

  Kind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  Kind kind_;
  std::vector<std::size_t> witness_;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

class UnsupportedSize : public Error {
 public:
  using Error::Error;
};

/// quotient() was given a subgroup that is not normal; witness is (g, n, g n g^-1).
class NotNormal : public Error {
 public:
  NotNormal(std::vector<std::size_t> witness, const std::string& what)
      : Error(what), witness_(std::move(witness)) {}
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  std::vector<std::size_t> witness_;
};

class Unrealizable : public Error {
 public:
  using Error::Error;
};

/// First failing power quandle axiom (1..9) with its lexicographically least witness.
class AxiomViolation : public Error {
 public:
  AxiomViolation(int axiom, std::vector<std::size_t> witness, const std::string& what)
      : Error(what), axiom_(axiom), witness_(std::move(witness)) {}

  int axiom() const noexcept { return axiom_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  int axiom_;
  std::vector<std::size_t> witness_;
};

class SizeBound : public Error {
 public:
  using Error::Error;
};

/// Coset enumeration exceeded its live-coset limit.
class LimitExceeded : public Error {
 public:
  LimitExceeded(std::size_t limit, const std::string& what) : Error(what), limit_(limit) {}
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t limit_;
};

class CentralityFailure : public Error {
 public:
  using Error::Error;
};

class SectionNotPqMorphism : public Error {
 public:
  using Error::Error;
};

class KernelNotCentral : public Error {
 public:
  using Error::Error;
};

class UnsupportedFormat : public Error {
 public:
  using Error::Error;
};

/// Malformed input document.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace powq

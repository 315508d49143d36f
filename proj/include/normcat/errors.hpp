#pragma once

#include <stdexcept>
#include <string>

namespace normcat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A pushout the instance cannot build (e.g. a free product with amalgamation).
class PushoutNotRepresentable : public Error {
 public:
  using Error::Error;
};

// The initial object lives outside the finite fragment (the integers in CRing).
class InitialNotRepresentable : public Error {
 public:
  using Error::Error;
};

class HomSetTooLarge : public Error {
 public:
  HomSetTooLarge(std::size_t candidates, std::size_t bound)
      : Error("hom-set enumeration needs " + std::to_string(candidates) +
              " candidates, bound is " + std::to_string(bound)),
        candidates(candidates),
        bound(bound) {}
  std::size_t candidates;
  std::size_t bound;
};

// Generic construction and closed form disagree. Always a bug.
class OverrideMismatch : public Error {
 public:
  using Error::Error;
};

class NoDiagonal : public Error {
 public:
  using Error::Error;
};

class NonCommutingSquare : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class ProbeRejected : public Error {
 public:
  using Error::Error;
};

}  // namespace normcat

#pragma once

#include <stdexcept>
#include <string>

namespace lfd {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad JSON, unknown vertex names, wrong vector lengths.
class InputError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class DisconnectedQuiver : public Error {
 public:
  using Error::Error;
};

class CyclicQuiver : public Error {
 public:
  using Error::Error;
};

class LoopAtVertex : public Error {
 public:
  using Error::Error;
};

class NotTame : public Error {
 public:
  using Error::Error;
};

class NonSquare : public Error {
 public:
  using Error::Error;
};

class NotSincere : public Error {
 public:
  using Error::Error;
};

class PrimeTooSmall : public Error {
 public:
  using Error::Error;
};

class NotInRepPrime : public Error {
 public:
  using Error::Error;
};

// Shape violation found during the normal form: (Q,d) is certainly not an LFD pair.
class NotLfdShape : public Error {
 public:
  using Error::Error;
};

class StepLimit : public Error {
 public:
  using Error::Error;
};

class OrthogonalityViolated : public Error {
 public:
  using Error::Error;
};

}  // namespace lfd

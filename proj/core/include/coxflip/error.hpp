#pragma once

#include <stdexcept>
#include <string>

namespace coxflip {

// Every engine failure derives from Error so callers can catch one type and
// still dispatch on the concrete kind (the HTTP layer maps kinds to status
// codes).
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class RangeError : public Error {
public:
  using Error::Error;
};

class ValidationError : public Error {
public:
  using Error::Error;
};

class DimensionError : public Error {
public:
  using Error::Error;
};

class SingularError : public Error {
public:
  using Error::Error;
};

class CapacityError : public Error {
public:
  using Error::Error;
};

class BackendError : public Error {
public:
  using Error::Error;
};

class NotPermutationError : public Error {
public:
  using Error::Error;
};

class UnsupportedFamily : public Error {
public:
  using Error::Error;
};

} // namespace coxflip

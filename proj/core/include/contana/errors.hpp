#pragma once

#include <stdexcept>
#include <string>

namespace contana {

// Base of every error raised by the library. The CLI maps subclasses onto
// process exit codes.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error { public: using Error::Error; };
class KindError : public Error { public: using Error::Error; };
class ParseError : public Error { public: using Error::Error; };
class InsufficientData : public Error { public: using Error::Error; };
class ShapeError : public Error { public: using Error::Error; };
class GeometryError : public Error { public: using Error::Error; };
class BudgetError : public Error { public: using Error::Error; };
class PreconditionError : public Error { public: using Error::Error; };
class EmptyCollection : public Error { public: using Error::Error; };

class IoError : public Error { public: using Error::Error; };

// No delta satisfies the requested epsilon at the tabulated resolution.
class Unachievable : public Error { public: using Error::Error; };

}  // namespace contana

#ifndef TRACKBA_ERRORS_HPP
#define TRACKBA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace trackba {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A depth value that must be positive is zero or negative.
class InvalidDepthError : public Error {
 public:
  using Error::Error;
};

// A point mapped to the non-positive-z half space of a camera.
class BehindCameraError : public Error {
 public:
  using Error::Error;
};

// Point sets too small or rank-deficient for a closed-form alignment.
class DegenerateConfigError : public Error {
 public:
  using Error::Error;
};

// An argument fell outside its documented domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// The damped normal equations stayed singular after escalation.
class SolverFailureError : public Error {
 public:
  using Error::Error;
};

// A frame entered the pose system with too few usable residual terms.
class UnderConstrainedFrameError : public Error {
 public:
  using Error::Error;
};

// A generated scene has a frame with no visible query points.
class InfeasibleSceneError : public Error {
 public:
  using Error::Error;
};

// An optimization produced a non-finite objective.
class DivergedError : public Error {
 public:
  using Error::Error;
};

// File or stream I/O failed, or a file did not match its format.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace trackba

#endif  // TRACKBA_ERRORS_HPP

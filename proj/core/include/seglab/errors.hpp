#pragma once

#include <stdexcept>
#include <string>

namespace seglab {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Tensor shapes do not line up (channel mismatch, non-broadcastable axes, ...).
struct DimensionError : Error {
  using Error::Error;
};

/// Spatial geometry is invalid (odd pooling input, non-integer conv output,
/// image size not divisible by the model's downsampling factor, ...).
struct GeometryError : Error {
  using Error::Error;
};

/// A component was used with an unsupported or mismatched configuration.
struct ConfigError : Error {
  using Error::Error;
};

/// An operation was called in the wrong state (e.g. backward without a
/// recorded forward pass).
struct StateError : Error {
  using Error::Error;
};

/// A caller-supplied value is out of range or otherwise invalid.
struct ArgumentError : Error {
  using Error::Error;
};

/// A file or stream could not be parsed; messages name the byte offset
/// where applicable.
struct ParseError : Error {
  using Error::Error;
};

/// A referenced artifact (file, mask, checkpoint) does not exist.
struct NotFoundError : Error {
  using Error::Error;
};

/// Checkpoint loading failures, kept distinct so callers can tell a foreign
/// file from a stale format from a corrupt one.
struct CheckpointMagicError : Error {
  using Error::Error;
};
struct CheckpointVersionError : Error {
  using Error::Error;
};
struct CheckpointIntegrityError : Error {
  using Error::Error;
};

}  // namespace seglab

#pragma once

#include <stdexcept>

namespace entmap {

// Base class for every error thrown by the library. Subtypes exist so callers
// and tests can distinguish failure modes; all carry a human-readable message.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Label space exceeds the exact-enumeration guard (L > 20).
struct EnumerationTooLarge final : Error {
  using Error::Error;
};

// Vector/record/prior sizes do not agree on one label space.
struct DimensionMismatch final : Error {
  using Error::Error;
};

// Unsmoothed estimation with a marginal count of 0 or N.
struct DegenerateMarginal final : Error {
  using Error::Error;
};

// Unsmoothed estimation with an empty pairwise joint count.
struct DegenerateJoint final : Error {
  using Error::Error;
};

// Mutual information requested for a label pair (i, i).
struct SameIndex final : Error {
  using Error::Error;
};

// Logit input is NaN or infinite.
struct NonFiniteLogit final : Error {
  using Error::Error;
};

// Prior weight alpha is negative or non-finite.
struct NegativeAlpha final : Error {
  using Error::Error;
};

// Prediction and gold sequences differ in length or vector size.
struct LengthMismatch final : Error {
  using Error::Error;
};

// Annotation items missing raters or with inconsistent rater counts.
struct IncompleteAnnotation final : Error {
  using Error::Error;
};

// A prediction id has no matching gold item.
struct MissingGold final : Error {
  using Error::Error;
};

// The same (id, label) response appears more than once.
struct DuplicateResponse final : Error {
  using Error::Error;
};

// An (id, label) answer is absent under the strict fill policy.
struct MissingResponse final : Error {
  using Error::Error;
};

// Malformed file content; message carries file and line number.
struct ParseError final : Error {
  using Error::Error;
};

// File could not be opened, read, or written.
struct IoError final : Error {
  using Error::Error;
};

// Any other contract violation (bad label names, out-of-range values, ...).
struct ValidationError final : Error {
  using Error::Error;
};

}  // namespace entmap

#pragma once

#include <stdexcept>
#include <string>

namespace alm {

// Root of all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed text input (PGM, mask files, CSV, string-matrix blocks).
struct ParseError : Error {
    using Error::Error;
};

// Filesystem-level failure, message carries the offending path.
struct IoError : Error {
    using Error::Error;
};

// Cells of a string-matrix grid do not share one depth.
struct NonUniformDepth : Error {
    using Error::Error;
};

// A structuring-element chain is larger than the layer it is applied to.
struct ChainTooLarge : Error {
    using Error::Error;
};

struct EmptyDataset : Error {
    using Error::Error;
};

struct ZeroTotalWeight : Error {
    using Error::Error;
};

// A pass cap was exhausted in a context that requires a fixed point.
struct NonConvergence : Error {
    using Error::Error;
};

}  // namespace alm

#pragma once

#include <stdexcept>
#include <string>

namespace benthos {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Tensor/layer shape disagreement.
struct DimensionError : Error {
    using Error::Error;
};

/// Malformed input file (raster header, CSV row, model container).
struct ParseError : Error {
    using Error::Error;
};

/// Invalid configuration or usage of a command/operation.
struct ConfigError : Error {
    using Error::Error;
};

/// Data violates an operation's preconditions (nodata, degenerate stats, ...).
struct DataError : Error {
    using Error::Error;
};

/// Training diverged or produced non-finite values.
struct TrainingError : Error {
    using Error::Error;
};

/// API misuse (backward without a recorded forward pass, ...).
struct UsageError : Error {
    using Error::Error;
};

/// Coordinate or window outside the raster.
struct OutOfBoundsError : Error {
    using Error::Error;
};

}  // namespace benthos

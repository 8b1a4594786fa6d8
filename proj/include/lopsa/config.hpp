#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace lopsa {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an operation would enumerate a space larger than the
// configured cap (n! orders, 2^k boolean assignments, ...).
struct EnumerationBoundError : Error {
    using Error::Error;
};

// Precondition violations on user-supplied objects.
struct InvalidInputError : Error {
    using Error::Error;
};

namespace config {

// Release string, embedded in generated reports.
const char* version();

// Largest n for which n! order enumeration is permitted.
// Override with --enum-cap or the LOPSA_ENUM_CAP environment variable.
int enum_cap();
void set_enum_cap(int cap);

// Largest number of mentioned variables a boolean exhaustion may sweep.
int exhaustion_cap();
void set_exhaustion_cap(int cap);

// Worker threads for order-space scans. 1 disables parallelism.
int workers();
void set_workers(int w);

} // namespace config

} // namespace lopsa

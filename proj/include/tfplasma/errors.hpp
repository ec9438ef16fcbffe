#pragma once

#include <stdexcept>
#include <string>

namespace tfp {

/// A state left the admissible set (positive density / positive pressure).
class AdmissibilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A time step could not be completed. Carries the failing cell and time so
/// a driver can report where the run died (or retry with a smaller step).
class StepFailure : public std::runtime_error {
public:
    StepFailure(const std::string& reason, int i, int j, double t)
        : std::runtime_error("step failure at cell (" + std::to_string(i) + "," +
                             std::to_string(j) + "), t=" + std::to_string(t) + ": " + reason),
          cell_i(i), cell_j(j), time(t) {}

    int cell_i;
    int cell_j;
    double time;
};

/// A local linear system could not be solved (pivot underflow).
class SingularSystemError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad user input (config file, CLI value, parameter out of range).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace tfp

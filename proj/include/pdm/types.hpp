#pragma once

#include <stdexcept>
#include <string>

namespace pdm {

/// Planar rigid-body rate in the body frame: forward, lateral, yaw.
struct BodyVelocity {
    double xdot = 0.0;      ///< forward speed [m/s]
    double ydot = 0.0;      ///< lateral speed, positive left [m/s]
    double thetadot = 0.0;  ///< yaw rate, positive counterclockwise [rad/s]
};

/// Track surface speeds. Positive values propel the vehicle forward.
struct TrackSpeeds {
    double Sr = 0.0;  ///< right track [m/s]
    double Sl = 0.0;  ///< left track [m/s]
};

enum class Side { Left, Right };

inline const char* to_string(Side s) { return s == Side::Left ? "left" : "right"; }

/// A configuration invariant was violated; the message names the invariant.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A track footprint spans no contact line; the model cannot continue.
class ContactError : public std::runtime_error {
public:
    explicit ContactError(const std::string& what) : std::runtime_error(what) {}
};

/// No nonnegative normal-force distribution exists (tip-over).
class StaticsError : public std::runtime_error {
public:
    explicit StaticsError(const std::string& what) : std::runtime_error(what) {}
};

/// A modeling assumption does not hold for the given configuration.
class ModelError : public std::runtime_error {
public:
    explicit ModelError(const std::string& what) : std::runtime_error(what) {}
};

/// Regression could not meet its constraint residuals.
class FitError : public std::runtime_error {
public:
    explicit FitError(const std::string& what) : std::runtime_error(what) {}
};

/// Solver failure that cannot be expressed through a result flag.
class SolverError : public std::runtime_error {
public:
    explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pdm

// errors.hpp — Exception types shared across the toolkit

#pragma once

#include <stdexcept>

namespace qfridge {

struct DomainError : std::runtime_error { using std::runtime_error::runtime_error; };
struct SingularMatrix : std::runtime_error { using std::runtime_error::runtime_error; };
struct NotHermitian : std::runtime_error { using std::runtime_error::runtime_error; };
struct ResonanceViolation : std::runtime_error { using std::runtime_error::runtime_error; };
struct NonPositiveFrequency : std::runtime_error { using std::runtime_error::runtime_error; };
struct DegenerateKernel : std::runtime_error { using std::runtime_error::runtime_error; };
struct NotSteady : std::runtime_error { using std::runtime_error::runtime_error; };
struct InvalidSpec : std::runtime_error { using std::runtime_error::runtime_error; };
struct LawViolation : std::runtime_error { using std::runtime_error::runtime_error; };
struct NoCoolingRegion : std::runtime_error { using std::runtime_error::runtime_error; };
struct SolverFailure : std::runtime_error { using std::runtime_error::runtime_error; };
struct ConfigError : std::runtime_error { using std::runtime_error::runtime_error; };

} // namespace qfridge

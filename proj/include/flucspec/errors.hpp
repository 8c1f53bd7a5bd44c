#ifndef FLUCSPEC_ERRORS_HPP
#define FLUCSPEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace flucspec {

// Configuration / input-file problems. CLI maps these to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failures (non-convergent fits, degenerate data). Exit code 3.
class FitError : public std::runtime_error {
 public:
  explicit FitError(const std::string& what) : std::runtime_error(what) {}
};

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kConfig = 2;
inline constexpr int kNumerical = 3;
}  // namespace exit_code

}  // namespace flucspec

#endif

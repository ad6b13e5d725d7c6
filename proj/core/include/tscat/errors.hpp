#ifndef TSCAT_ERRORS_HPP
#define TSCAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tscat {

/// Base error carrying a stable machine-readable code next to the human message.
/// The code strings double as skip reasons in scan output.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), m_code(std::move(code)) {}
  const std::string& code() const noexcept { return m_code; }

 private:
  std::string m_code;
};

struct BadShape final : Error {
  explicit BadShape(const std::string& what) : Error("BadShape", what) {}
};

struct SingularMatrix final : Error {
  explicit SingularMatrix(const std::string& what) : Error("SingularMatrix", what) {}
};

struct NotHermitian final : Error {
  explicit NotHermitian(const std::string& what) : Error("NotHermitian", what) {}
};

struct OnCutWithoutSide final : Error {
  explicit OnCutWithoutSide(const std::string& what) : Error("OnCutWithoutSide", what) {}
};

struct AtPole final : Error {
  explicit AtPole(const std::string& what) : Error("AtPole", what) {}
};

struct NonConvergent final : Error {
  explicit NonConvergent(const std::string& what) : Error("NonConvergent", what) {}
};

struct WrongHalfPlane final : Error {
  explicit WrongHalfPlane(const std::string& what) : Error("WrongHalfPlane", what) {}
};

struct Precondition final : Error {
  explicit Precondition(const std::string& what) : Error("Precondition", what) {}
};

struct EdgeMass final : Error {
  explicit EdgeMass(const std::string& what) : Error("EdgeMass", what) {}
};

struct NotInK final : Error {
  explicit NotInK(const std::string& what) : Error("NotInK", what) {}
};

struct MaskedEverywhere final : Error {
  explicit MaskedEverywhere(const std::string& what) : Error("MaskedEverywhere", what) {}
};

struct NegativeNorm final : Error {
  explicit NegativeNorm(const std::string& what) : Error("NegativeNorm", what) {}
};

struct ConfigError final : Error {
  explicit ConfigError(const std::string& what) : Error("ConfigError", what) {}
};

}  // namespace tscat

#endif

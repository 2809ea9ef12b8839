#pragma once

#include <stdexcept>
#include <string>

namespace specgeo {

enum class Errc {
  invalid_argument = 1,
  bad_parameters,
  invalid_christoffel,
  complex_roots,
  negative_discriminant,
  no_common_root,
  inconsistent_curvature,
  existence_violated,
  not_realizable,
  exact_unavailable,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::bad_parameters: return "BadParameters";
    case Errc::invalid_christoffel: return "InvalidChristoffel";
    case Errc::complex_roots: return "ComplexRoots";
    case Errc::negative_discriminant: return "NegativeDiscriminant";
    case Errc::no_common_root: return "NoCommonRoot";
    case Errc::inconsistent_curvature: return "InconsistentCurvature";
    case Errc::existence_violated: return "ExistenceViolated";
    case Errc::not_realizable: return "NotRealizable";
    case Errc::exact_unavailable: return "ExactUnavailable";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace specgeo

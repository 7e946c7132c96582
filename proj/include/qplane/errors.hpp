#pragma once

#include <stdexcept>
#include <string>

namespace qplane {

enum class Errc {
  DivisionByZero,
  DegenerateRatio,
  RootOfUnityQ,
  NumericDenominatorVanishes,
  NotAMonomial,
  NotAUnit,
  NotHyperbolic,
  WeightRelationViolated,
  GenericityViolated,
  RelationViolated,
  NotAWeightAction,
  SolverBudgetExceeded,
  ParseError,
  ConfigError,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::DegenerateRatio: return "DegenerateRatio";
    case Errc::RootOfUnityQ: return "RootOfUnityQ";
    case Errc::NumericDenominatorVanishes: return "NumericDenominatorVanishes";
    case Errc::NotAMonomial: return "NotAMonomial";
    case Errc::NotAUnit: return "NotAUnit";
    case Errc::NotHyperbolic: return "NotHyperbolic";
    case Errc::WeightRelationViolated: return "WeightRelationViolated";
    case Errc::GenericityViolated: return "GenericityViolated";
    case Errc::RelationViolated: return "RelationViolated";
    case Errc::NotAWeightAction: return "NotAWeightAction";
    case Errc::SolverBudgetExceeded: return "SolverBudgetExceeded";
    case Errc::ParseError: return "ParseError";
    case Errc::ConfigError: return "ConfigError";
  }
  return "UnknownError";
}

/// All library failures carry a code so callers (and the CLI) can map them
/// to exit statuses without string matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace qplane

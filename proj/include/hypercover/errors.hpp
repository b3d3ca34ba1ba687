#pragma once

#include <stdexcept>
#include <string>

namespace hypercover {

enum class Errc {
  empty_set,
  bad_arity,
  not_a_cover,
  too_large,
  property_violated,
  not_maximizing,
  universe_mismatch,
  empty_edge,
  unknown_vertex,
  bad_cut,
  solver_failure,
  builder_failure,
  hypothesis_violated,
  generation_timeout,
  parse_error,
  overflow,
  internal,
};

const char* errc_name(Errc c) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) +
                           (msg.empty() ? "" : ": " + msg)),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& msg = {}) {
  throw Error(code, msg);
}

inline const char* errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::empty_set: return "EmptySet";
    case Errc::bad_arity: return "BadArity";
    case Errc::not_a_cover: return "NotACover";
    case Errc::too_large: return "TooLarge";
    case Errc::property_violated: return "PropertyViolated";
    case Errc::not_maximizing: return "NotMaximizing";
    case Errc::universe_mismatch: return "UniverseMismatch";
    case Errc::empty_edge: return "EmptyEdge";
    case Errc::unknown_vertex: return "UnknownVertex";
    case Errc::bad_cut: return "BadCut";
    case Errc::solver_failure: return "SolverFailure";
    case Errc::builder_failure: return "BuilderFailure";
    case Errc::hypothesis_violated: return "HypothesisViolated";
    case Errc::generation_timeout: return "GenerationTimeout";
    case Errc::parse_error: return "ParseError";
    case Errc::overflow: return "Overflow";
    case Errc::internal: return "InternalError";
  }
  return "Error";
}

}  // namespace hypercover

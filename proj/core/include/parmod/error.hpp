#pragma once

#include <stdexcept>
#include <string>

namespace parmod {

// Reasons a request can be rejected on mathematical grounds. The CLI maps any
// DomainError to exit code 1; malformed command lines exit 2.
enum class errc {
  invalid_weight,        // rows not strictly decreasing / not interior where required
  invalid_subset,        // Schubert index out of range or not strictly increasing
  box_mismatch,          // classes from different Grassmannians combined
  bad_arity,             // Gromov-Witten input with fewer than 3 classes
  degenerate_base,       // scaling base lies on a wall
  degenerate_endpoint,   // segment endpoint lies on a wall
  not_on_wall,           // classification requested at a weight off the wall
  empty_stratum,         // wall met without any actual change of moduli
  perturbation_required, // non-simple crossing group blocks a Picard trace
  n_too_small,           // splitting pair with h^0 below the stable range
  precondition,          // parameter outside an operation's stated domain
  boundary_divisor,      // divisor class on the cone boundary where interior needed
  outside_cone,          // divisor class outside the effective cone
  corner_unsupported,    // divisor class on two or more facets
  parse,                 // malformed file or flag payload
};

class DomainError : public std::runtime_error {
 public:
  DomainError(errc kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  errc kind() const { return kind_; }

 private:
  errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& what) {
  throw DomainError(kind, what);
}

inline const char* errc_name(errc kind) {
  switch (kind) {
    case errc::invalid_weight: return "invalid-weight";
    case errc::invalid_subset: return "invalid-subset";
    case errc::box_mismatch: return "box-mismatch";
    case errc::bad_arity: return "bad-arity";
    case errc::degenerate_base: return "degenerate-base";
    case errc::degenerate_endpoint: return "degenerate-endpoint";
    case errc::not_on_wall: return "not-on-wall";
    case errc::empty_stratum: return "empty-stratum";
    case errc::perturbation_required: return "perturbation-required";
    case errc::n_too_small: return "n-too-small";
    case errc::precondition: return "precondition";
    case errc::boundary_divisor: return "boundary-divisor";
    case errc::outside_cone: return "outside-cone";
    case errc::corner_unsupported: return "corner-unsupported";
    case errc::parse: return "parse";
  }
  return "unknown";
}

}  // namespace parmod

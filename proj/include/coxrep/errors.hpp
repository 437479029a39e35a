#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace coxrep {

// Every library failure is an Error carrying a stable machine-readable kind,
// which the CLI forwards verbatim in its error JSON.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define COXREP_DEFINE_ERROR(Name, tag)                                     \
  class Name : public Error {                                              \
   public:                                                                 \
    explicit Name(const std::string& message) : Error(tag, message) {}     \
  };

COXREP_DEFINE_ERROR(DimensionError, "dimension")
COXREP_DEFINE_ERROR(RangeError, "range")
COXREP_DEFINE_ERROR(CycleError, "cycle")
COXREP_DEFINE_ERROR(VertexKindError, "vertex_kind")
COXREP_DEFINE_ERROR(MismatchError, "mismatch")
COXREP_DEFINE_ERROR(NonReducedError, "non_reduced")
COXREP_DEFINE_ERROR(SingularRootError, "singular_root")
COXREP_DEFINE_ERROR(IntegralityError, "integrality")
COXREP_DEFINE_ERROR(InconclusiveError, "inconclusive")
COXREP_DEFINE_ERROR(ScopeError, "scope")
COXREP_DEFINE_ERROR(ResourceError, "resource")
COXREP_DEFINE_ERROR(InvariantError, "internal_invariant")
COXREP_DEFINE_ERROR(NotSortableError, "not_sortable")
COXREP_DEFINE_ERROR(NotTorsionFreeError, "not_torsion_free")
COXREP_DEFINE_ERROR(NotARootError, "not_a_root")
COXREP_DEFINE_ERROR(ParseError, "parse")

#undef COXREP_DEFINE_ERROR

}  // namespace coxrep

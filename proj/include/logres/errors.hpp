#pragma once

#include <stdexcept>
#include <string>

namespace logres {

// Every engine failure is a typed exception carrying a stable code string.
class LogresError : public std::runtime_error {
 public:
  LogresError(std::string code, const std::string& msg)
      : std::runtime_error(msg.empty() ? code : code + ": " + msg),
        code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

#define LOGRES_DECLARE_ERROR(Name)                       \
  class Name : public LogresError {                      \
   public:                                               \
    explicit Name(const std::string& msg = std::string()) \
        : LogresError(#Name, msg) {}                     \
  }

LOGRES_DECLARE_ERROR(DimensionMismatch);
LOGRES_DECLARE_ERROR(NotPointed);
LOGRES_DECLARE_ERROR(HilbertBoundExceeded);
LOGRES_DECLARE_ERROR(TorsionMonoid);
LOGRES_DECLARE_ERROR(InconsistentPoint);
LOGRES_DECLARE_ERROR(ZeroIdeal);
LOGRES_DECLARE_ERROR(FactorialBlowup);
LOGRES_DECLARE_ERROR(JetTruncationNeeded);
LOGRES_DECLARE_ERROR(NoMaxContact);
LOGRES_DECLARE_ERROR(InfiniteOrder);
LOGRES_DECLARE_ERROR(NotFreeChart);
LOGRES_DECLARE_ERROR(ResourceBound);
LOGRES_DECLARE_ERROR(EngineDisagreement);
LOGRES_DECLARE_ERROR(EquivariantUnsupported);
LOGRES_DECLARE_ERROR(IrrationalMaxLocus);
LOGRES_DECLARE_ERROR(InvariantDidNotDrop);
LOGRES_DECLARE_ERROR(MaxStepsExceeded);
LOGRES_DECLARE_ERROR(ParseError);

#undef LOGRES_DECLARE_ERROR

}  // namespace logres

#include "logres/config.hpp"

namespace logres {

Limits& limits() {
  static Limits instance;
  return instance;
}

LimitsGuard::LimitsGuard() : saved_(limits()) {}

LimitsGuard::~LimitsGuard() { limits() = saved_; }

}  // namespace logres

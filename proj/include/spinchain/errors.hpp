#pragma once

#include <stdexcept>
#include <string>

namespace spinchain {

// Base class for all spinchain errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define SPINCHAIN_DEFINE_ERROR(name)                              \
  class name : public Error {                                     \
   public:                                                        \
    explicit name(const std::string& what) : Error(#name ": " + what) {} \
  }

SPINCHAIN_DEFINE_ERROR(InvalidChainSpec);
SPINCHAIN_DEFINE_ERROR(ChiOutOfRange);
SPINCHAIN_DEFINE_ERROR(DegenerateCoupling);
SPINCHAIN_DEFINE_ERROR(SizeTooLarge);
SPINCHAIN_DEFINE_ERROR(BadIndices);
SPINCHAIN_DEFINE_ERROR(NegativeDiscriminant);
SPINCHAIN_DEFINE_ERROR(NotADensityMatrix);
SPINCHAIN_DEFINE_ERROR(NotFullyConnected);
SPINCHAIN_DEFINE_ERROR(NotNearestNeighbor);
SPINCHAIN_DEFINE_ERROR(VzUnsupported);
SPINCHAIN_DEFINE_ERROR(SeparationOutOfRange);
SPINCHAIN_DEFINE_ERROR(BlockOutOfRange);
SPINCHAIN_DEFINE_ERROR(WeightOutOfRange);
SPINCHAIN_DEFINE_ERROR(NonPositiveDelta);
SPINCHAIN_DEFINE_ERROR(NonPositiveTemperature);
SPINCHAIN_DEFINE_ERROR(EmptyGrid);
SPINCHAIN_DEFINE_ERROR(ConfigError);
SPINCHAIN_DEFINE_ERROR(IoError);

#undef SPINCHAIN_DEFINE_ERROR

}  // namespace spinchain

#pragma once

#include <atomic>
#include <mutex>

#include "linkhom/modules/fpmodule.hpp"

namespace linkhom {

struct FPModule::State {
  Ring ring;
  Matrix rel;
  std::atomic<MinimalFlag> flag{MinimalFlag::Unknown};

  std::mutex mu;
  std::shared_ptr<const Submodule> relmod;
  std::shared_ptr<const HilbertSeries> series;
  std::shared_ptr<const Lifter> lifter;
  std::shared_ptr<const MinimalPresentation> minpres;
  std::shared_ptr<const Resolution> resolution;
};

}  // namespace linkhom

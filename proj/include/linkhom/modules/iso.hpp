#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "linkhom/modules/fpmodule.hpp"

namespace linkhom {

enum class IsoStatus { Yes, No, Undetermined };

struct IsoOptions {
  bool allow_twist = false;
  std::uint64_t seed = 0;
  int retries = 64;
  /// Exhaustive search over F_p when the degree-0 Hom space has at most this dimension.
  int exhaustive_dim = 3;
};

struct IsoVerdict {
  IsoStatus status = IsoStatus::Undetermined;
  /// N is compared with M(twist).
  int twist = 0;
  std::string reason;
  /// For Yes: f : M(twist) -> N and its verified inverse g.
  std::optional<GradedMap> forward;
  std::optional<GradedMap> backward;
};

const char* to_string(IsoStatus s);

IsoVerdict is_isomorphic(const FPModule& m, const FPModule& n, const IsoOptions& opts = {});

/// Hash of a module's canonical data (ring, minimal presentation); used to seed searches and key reports.
std::uint64_t module_hash(const FPModule& m);

}  // namespace linkhom

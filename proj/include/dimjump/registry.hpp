#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dimjump/codes.hpp"

namespace dimjump {

struct PublishedParams {
  std::size_t n = 0, k = 0, d = 0;
};

/// One catalogued 3D/2D construction: the defining group plus either three
/// polynomials (tricycle form) or three check matrices over R.
struct RegistryEntry {
  std::string name;
  std::vector<std::uint32_t> orders;
  // polynomial entries (1x1 checks)
  std::optional<std::string> a, b, c;
  // general matrix entries, row-major polynomial strings
  std::optional<std::vector<std::vector<std::string>>> ha, hb, hc;
  PublishedParams published_2d;
  PublishedParams published_3d;
  bool distance_certifiable_2d = true;  // exhaustive search fits the budget
  bool distance_certifiable_3d = true;
};

const std::vector<RegistryEntry>& registry_entries();
std::vector<std::string> registry_names();
RegistryEntry registry_load(const std::string& name);

ClassicalCode registry_factor(const RegistryEntry& entry, std::size_t index);
LpCode build_registry_2d(const RegistryEntry& entry);
LpCode build_registry_3d(const RegistryEntry& entry);

}  // namespace dimjump

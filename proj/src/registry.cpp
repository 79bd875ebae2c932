#include "dimjump/registry.hpp"

#include <stdexcept>

namespace dimjump {

namespace {

std::vector<RegistryEntry> make_entries() {
  std::vector<RegistryEntry> out;

  {
    RegistryEntry e;
    e.name = "pentagon";
    e.orders = {1};
    std::vector<std::vector<std::string>> cycle3 = {
        {"1", "1", "0"}, {"0", "1", "1"}, {"1", "0", "1"}};
    // Edge-vertex incidence of the complete graph on five vertices.
    std::vector<std::vector<std::string>> pentagon = {
        {"1", "0", "0", "0", "1", "1", "0", "0", "1", "0"},
        {"1", "1", "0", "0", "0", "0", "1", "0", "0", "1"},
        {"0", "1", "1", "0", "0", "1", "0", "1", "0", "0"},
        {"0", "0", "1", "1", "0", "0", "1", "0", "1", "0"},
        {"0", "0", "0", "1", "1", "0", "0", "1", "0", "1"}};
    e.ha = cycle3;
    e.hb = pentagon;
    e.hc = cycle3;
    e.published_2d = {45, 7, 3};
    e.published_3d = {180, 8, 3};
    out.push_back(e);
  }
  {
    RegistryEntry e;
    e.name = "lifted-toric-2";
    e.orders = {2};
    std::vector<std::vector<std::string>> h = {{"1", "x"}, {"1", "1"}};
    e.ha = h;
    e.hb = h;
    e.hc = h;
    e.published_2d = {16, 2, 4};
    e.published_3d = {48, 3, 4};
    out.push_back(e);
  }
  {
    RegistryEntry e;
    e.name = "lifted-toric-3";
    e.orders = {2};
    std::vector<std::vector<std::string>> h = {
        {"1", "x", "0"}, {"0", "1", "1"}, {"1", "0", "1"}};
    e.ha = h;
    e.hb = h;
    e.hc = h;
    e.published_2d = {36, 2, 6};
    e.published_3d = {162, 3, 6};
    e.distance_certifiable_3d = false;
    out.push_back(e);
  }
  {
    RegistryEntry e;
    e.name = "bt-27";
    e.orders = {3, 3};
    e.a = "x^2*y + x^2*y^2";
    e.b = "1 + x*y^2";
    e.c = "x + x^2*y";
    e.published_2d = {18, 2, 3};
    e.published_3d = {27, 3, 3};
    out.push_back(e);
  }
  {
    RegistryEntry e;
    e.name = "bt-45";
    e.orders = {3, 5};
    e.a = "x + y^2";
    e.b = "1 + x*y^2";
    e.c = "x + x*y^3";
    e.published_2d = {30, 2, 5};
    e.published_3d = {45, 3, 4};
    out.push_back(e);
  }
  {
    RegistryEntry e;
    e.name = "bt-81";
    e.orders = {3, 9};
    e.a = "x*y^3 + x^2*y";
    e.b = "1 + x*y^8";
    e.c = "x^2*y^4 + x^2*y^6";
    e.published_2d = {54, 2, 6};
    e.published_3d = {81, 3, 5};
    out.push_back(e);
  }
  {
    RegistryEntry e;
    e.name = "tt-210";
    e.orders = {2, 5, 7};
    e.a = "y^2*z^2 + x*y^2*z^4";
    e.b = "1 + x*y^2*z^3";
    e.c = "y*z + y^4*z^2";
    e.published_2d = {140, 2, 8};
    e.published_3d = {210, 3, 7};
    e.distance_certifiable_2d = false;
    e.distance_certifiable_3d = false;
    out.push_back(e);
  }
  {
    RegistryEntry e;
    e.name = "fig-s1";
    e.orders = {3, 3};
    e.a = "x*y^2 + x^2";
    e.b = "x^2 + x^2*y";
    e.c = "y^2 + x*y";
    e.published_2d = {18, 2, 3};
    e.published_3d = {27, 3, 3};
    out.push_back(e);
  }
  return out;
}

}  // namespace

const std::vector<RegistryEntry>& registry_entries() {
  static const std::vector<RegistryEntry> entries = make_entries();
  return entries;
}

std::vector<std::string> registry_names() {
  std::vector<std::string> names;
  for (const RegistryEntry& e : registry_entries()) names.push_back(e.name);
  return names;
}

RegistryEntry registry_load(const std::string& name) {
  for (const RegistryEntry& e : registry_entries())
    if (e.name == name) return e;
  throw std::invalid_argument("unknown code name: " + name);
}

ClassicalCode registry_factor(const RegistryEntry& entry, std::size_t index) {
  FiniteAbelianGroup group(entry.orders);
  const std::optional<std::string>* polys[3] = {&entry.a, &entry.b, &entry.c};
  const std::optional<std::vector<std::vector<std::string>>>* mats[3] = {&entry.ha, &entry.hb,
                                                                         &entry.hc};
  if (polys[index]->has_value()) {
    RMatrix m(group, 1, 1);
    m.at(0, 0) = parse_element(**polys[index], group);
    return ClassicalCode{group, m};
  }
  if (!mats[index]->has_value()) throw std::invalid_argument("registry entry missing factor");
  const auto& rows = **mats[index];
  RMatrix m(group, rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.front().size())
      throw std::invalid_argument("ragged registry matrix");
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      m.at(r, c) = parse_element(rows[r][c], group);
  }
  return ClassicalCode{group, m};
}

LpCode build_registry_2d(const RegistryEntry& entry) {
  return build_lp({registry_factor(entry, 0), registry_factor(entry, 1)});
}

LpCode build_registry_3d(const RegistryEntry& entry) {
  if (entry.a && entry.b && entry.c) {
    FiniteAbelianGroup group(entry.orders);
    return bt_direct(parse_element(*entry.a, group), parse_element(*entry.b, group),
                     parse_element(*entry.c, group));
  }
  return build_lp({registry_factor(entry, 0), registry_factor(entry, 1),
                   registry_factor(entry, 2)});
}

}  // namespace dimjump

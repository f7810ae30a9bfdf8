#include "plumbkit/fixtures.hpp"

#include "plumbkit/errors.hpp"
#include "plumbkit/graph_io.hpp"

#include "fixture_data.hpp"

namespace plumbkit {

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = {
      {"d2", fixture_data::d2, std::nullopt},
      {"d3", fixture_data::d3, BrieskornTriple(5, 9, 13)},
      {"d4", fixture_data::d4, std::nullopt},
      {"e8", fixture_data::e8, std::nullopt},
      {"sigma-3-13-23", fixture_data::sigma_3_13_23, std::nullopt},
  };
  return all;
}

const Fixture& fixture(std::string_view name) {
  for (const auto& f : fixtures())
    if (f.name == name) return f;
  throw DomainError("unknown fixture '" + std::string(name) + "'");
}

PlumbingGraph load_fixture(std::string_view name) { return parse_graph(std::string(fixture(name).text)); }

}  // namespace plumbkit

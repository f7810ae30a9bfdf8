#pragma once

#include "plumbkit/graph.hpp"
#include "plumbkit/seifert.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace plumbkit {

// Diagrams shipped under fixtures/, compiled into the library.
struct Fixture {
  std::string_view name;
  std::string_view text;
  // Brieskorn sphere whose surgery description this diagram certifies: the
  // diagram is the sphere plus one 2-handle, so reducing it to S^3 shows the
  // sphere is integral surgery on a knot.
  std::optional<BrieskornTriple> surgery_certificate_for;
};

const std::vector<Fixture>& fixtures();

/// Throws DomainError for an unknown name.
const Fixture& fixture(std::string_view name);
PlumbingGraph load_fixture(std::string_view name);

}  // namespace plumbkit

#pragma once

#include <string>
#include <vector>

#include "g2flow/g2.hpp"
#include "g2flow/lie_algebra.hpp"

namespace g2flow {

// A named desk-scale case: a unimodular 7-dimensional Lie algebra together
// with an invariant positive 3-form.
struct Preset {
  LieAlgebraData algebra;
  AltForm phi;
  std::string note;
};

/// Names of the shipped presets.
std::vector<std::string> preset_names();

/// Look up a preset by name; throws std::out_of_range on unknown names.
Preset preset(const std::string& name);

}  // namespace g2flow

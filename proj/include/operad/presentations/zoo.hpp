#pragma once

#include "operad/presentations/presentation.hpp"

#include <string>
#include <vector>

namespace operad {

struct ZooEntry {
    std::string name;
    std::string summary;
    QuadPresentation pres;
    // dim P(n) for n = 1..4; non-symmetric dimensions for regular entries.
    std::vector<std::size_t> expected_dims;
    // Relations as entered (prefix expressions or v-coordinates); empty for derived entries.
    std::vector<std::string> relation_text;
    bool v_coordinates = false;
    // Relations taken from outside literature; not part of the acceptance checks.
    bool external = false;
};

// Entry names in a fixed display order.
const std::vector<std::string>& zoo_names();
bool zoo_has(const std::string& name);
// Throws std::invalid_argument listing the available names.
const ZooEntry& zoo_entry(const std::string& name);
const QuadPresentation& zoo_get(const std::string& name);

// As, PreLie and Perm over the regular S2-module in v-coordinates.
std::vector<std::string> v_relations_as();
std::vector<std::string> v_relations_prelie();
std::vector<std::string> v_relations_perm();

}  // namespace operad

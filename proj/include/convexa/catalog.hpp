#pragma once

#include <string>
#include <vector>

#include "convexa/code.hpp"

namespace convexa {

// The pinwheel family on n+1 neurons (n >= 5).
NeuralCode generate_Dn(int n);

// The sunflower code on 2n+2 neurons (n >= 2).
NeuralCode generate_sunflower(int n);

// Fixed names plus the parameterized forms "D<k>" and "S<k>".
// Throws InvalidArgument for an unknown name.
NeuralCode named_code(const std::string& name);

struct CatalogEntry {
  std::string name;
  std::string description;
};

std::vector<CatalogEntry> catalog_entries();

}  // namespace convexa

#pragma once

#include <string>
#include <vector>

#include "permstat/permutation.hpp"
#include "permstat/tableau.hpp"

namespace fixtures {

inline const char* kFigureOne =
    "11 5\n"
    "6,6,5,3,1\n"
    "011001\n"
    "000111\n"
    "00001\n"
    "011\n"
    "1\n";

inline permstat::PermutationTableau figure_one() { return permstat::parse_tableau(kFigureOne); }

inline permstat::Permutation P(const char* text) { return permstat::parse_permutation(text); }

inline std::vector<int> W(std::initializer_list<int> xs) { return std::vector<int>(xs); }

}  // namespace fixtures

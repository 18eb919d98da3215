#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptl/permutree.hpp"

namespace ptl {

// B(T): pairs (i,j), i<j, with j a descendant of i.
PairSet inversion_set(const Permutree& t);
std::vector<int> inversion_vector(const Permutree& t);

struct ConditionViolation {
    std::string condition;
    int i, j, k;
    std::string to_string() const;
};

// First violated characterization condition, if any.
std::optional<ConditionViolation> check_inversion_set(const PairSet& e, const Decoration& delta);
Permutree permutree_from_inversion_set(const PairSet& e, const Decoration& delta);

PairSet meet_inversion_set(const PairSet& a, const PairSet& b);
Permutree meet_via_inversions(const Permutree& a, const Permutree& b);

PairSet cubic_set(const Permutree& t);
std::vector<int> cubic_vector(const Permutree& t);

// corner[i-1] must be 0 or n-i.
Permutree extremal_permutree(const Decoration& delta, const std::vector<int>& corner);

struct CubicalPoint {
    Permutree tree;
    std::vector<int> point;
};
std::vector<CubicalPoint> cubical_embedding(const Decoration& delta, int cap = -1);

}  // namespace ptl

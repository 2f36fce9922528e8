#pragma once

#include <map>
#include <set>

#include "griffin/container.hpp"
#include "griffin/exponent.hpp"
#include "griffin/partition.hpp"

namespace griffin {

using CompositionSet = std::set<WeakComposition>;

// The three conditions cutting out D_{n,lambda}:
//   1. exactly one empty box;
//   2. rows decrease left to right and the empty box is at row 1, column 1;
//   3. a floating i sees, in every column to its left, a box that is empty
//      or holds a number larger than i.
bool satisfies_d_conditions(const ContainerDiagram& sigma);

// Codes of all diagrams in OP_{n,lambda} satisfying the three conditions,
// by exhaustive search. Requires 1 <= |lambda| <= n + 1.
CompositionSet build_D_direct(int n, const Partition& lambda);

// Same set through the recursion on the first entry, memoized.
// D_{m, empty partition} is empty.
CompositionSet build_D(int n, const Partition& lambda);

// Value lambda'_{j+1} prepended in the branch for corner j, keyed by that
// value. Throws InvariantViolation if two admissible corners share a value.
std::map<int, int> corner_by_leading_entry(int n, const Partition& lambda);

// For alpha outside C_{n,lambda,inf}, some beta in D_{n,lambda} with
// beta <= alpha entrywise, built by the three constructive steps (truncate,
// remove row inversions, slide floats left). Throws InvalidInput when alpha
// lies in C_{n,lambda,inf}.
WeakComposition dominate_down(const WeakComposition& alpha, const Partition& lambda);

// Entrywise-minimal members. Not part of D's definition; a convenience for
// inspecting redundancy.
CompositionSet minimal_elements(const CompositionSet& set);

}  // namespace griffin

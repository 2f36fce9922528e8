#pragma once

#include <string>
#include <vector>

#include "griffin/polynomial.hpp"

namespace griffin {

// Strictly increasing list of 1-based variable indices.
using IndexSet = std::vector<int>;

// Throws InvalidInput unless s is strictly increasing inside [1, ambient].
void check_index_set(const IndexSet& s, int ambient);

// {1, ..., n}
IndexSet full_set(int n);

// "{1,2,4}"
std::string index_set_to_string(const IndexSet& s);

// e_d(S): sum of squarefree degree-d monomials over S.
// e_0 = 1 and e_d = 0 for d < 0 or d > |S|.
Polynomial elementary(int d, const IndexSet& s, int ambient);

// h_d(x_1, ..., x_m): every degree-d monomial in the first m variables.
Polynomial complete_homogeneous(int d, int m, int ambient);

}  // namespace griffin

#pragma once

#include <string>
#include <vector>

namespace tokslide::testing {

struct ExprCase {
  std::string name;
  std::string expr;  // s-expression text
};

// Fixed, seeded corpus of irredundant expressions of width <= 3 on at most 8
// vertices: paths, stars, cycles, cliques, random cographs and random trees.
std::vector<ExprCase> expression_corpus();

}  // namespace tokslide::testing

// The built-in problem set: thirteen access control axioms and examples,
// each as an S4 problem (frame axioms R and T assumed) and a K problem.

#ifndef ICLSTT_CORPUS_HPP
#define ICLSTT_CORPUS_HPP

#include <string_view>
#include <vector>

#include "iclstt/icl.hpp"

namespace iclstt {

// 24 problems in table order: the S4 and K versions of each group, with K
// versions named `<name>^K`.
const std::vector<Problem>& corpus();

// Throws std::out_of_range for an unknown name.
const Problem& corpus_problem(std::string_view name);

}  // namespace iclstt

#endif  // ICLSTT_CORPUS_HPP

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nonarch/calculus.hpp"
#include "nonarch/lab/report.hpp"

namespace nonarch::lab {

// A finite system of equations f_i = F_i, inequations g_j != G_j, and
// inequalities h_k <= H_k over the elementary-function grammar in named
// variables. Membership of a point in the solution set is decided by exact
// evaluation (base field) or series evaluation up to cutoff (extension).
struct TransferSystem {
    std::string name;
    std::vector<std::string> variables;
    std::vector<std::pair<FnExpr, FnExpr>> equations;
    std::vector<std::pair<FnExpr, FnExpr>> inequations;
    std::vector<std::pair<FnExpr, FnExpr>> inequalities;
};

// Checks the two directions of the transfer principle at sample scale:
//  - every base sample's membership verdict must be reproduced when the
//    sample is embedded as constant series;
//  - every extension sample's verdict must match `expect_ext_member` when
//    given (defaulted to the base consensus when one exists).
// Sampling never proves the principle; verdicts are labeled "consistent
// with transfer". Evaluation errors are recorded per sample, not fatal.
DemoReport check_transfer(const TransferSystem& sys,
                          const std::vector<std::vector<Rational>>& base_samples,
                          const std::vector<std::vector<Series>>& ext_samples,
                          std::optional<bool> expect_ext_member = std::nullopt,
                          const Budget& budget = {});

} // namespace nonarch::lab

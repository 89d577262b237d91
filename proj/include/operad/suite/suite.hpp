#pragma once

#include "operad/exact/matrix.hpp"

#include <string>
#include <vector>

namespace operad {

struct CheckLine {
    bool ok;
    std::string text;
};

struct CriterionResult {
    int number = 0;
    std::string title;
    bool pass = false;
    double seconds = 0;
    double limit_seconds = 0;  // 0 = no runtime bound
    std::vector<CheckLine> checks;
};

// Identification of generators used to compare a computed product with a zoo entry;
// columns are the images of the computed generators.
struct NamedMap {
    std::string computed;
    std::string target;
    Matrix map;
};
const std::vector<NamedMap>& documented_maps();

constexpr int kSuiteCriteria = 9;
// Runs criterion k (1..9); never throws, exceptions become failed checks.
CriterionResult run_criterion(int k);
std::vector<CriterionResult> run_suite();

std::string criterion_line(const CriterionResult& r);
std::string criterion_report(const CriterionResult& r);

}  // namespace operad

#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ultraball/ballean.hpp"
#include "ultraball/laminar.hpp"
#include "ultraball/tree.hpp"

namespace ub {

// Space JSON: {"points": ["x1", ...], "matrix": [["0","2",...], ...]} with
// distances as exactly-parsed decimal or fraction strings.
Space parse_space(const std::string& text);
nlohmann::json space_json(const Space& space);

// Tree JSON (recursive): {"ball": ["x1","x3"], "label": "1", "children": [...]}.
// Leaves must carry singleton balls; internal balls are recomputed. A tree
// whose nodes consistently omit "label" parses as unlabeled.
LabeledTree parse_tree(const std::string& text);
nlohmann::json tree_json(const LabeledTree& tree);
std::string tree_dot(const LabeledTree& tree);

nlohmann::json rooted_json(const RootedTree& tree);
std::string rooted_dot(const RootedTree& tree);

// Family JSON: {"points": ["a","b"], "family": [["a"],["b"],["a","b"]]}.
SetFamily parse_family(const std::string& text);
nlohmann::json family_json(const SetFamily& f);

nlohmann::json ballean_json(const BalleanSpace& bs);

nlohmann::json metric_report_json(const MetricReport& rep, const Space& space);
nlohmann::json tree_check_json(const TreeCheckReport& rep);
nlohmann::json family_report_json(const FamilyReport& rep, const SetFamily& f);
nlohmann::json ballean_check_json(const BalleanCheckReport& rep);

// Subset JSON: array of point identifiers -> sorted index set.
std::vector<int> parse_subset(const Space& space, const std::string& text);

nlohmann::json ball_json(const Space& space, const Ball& ball);

}  // namespace ub

#include "ultraball/json_io.hpp"

#include <algorithm>
#include <functional>

#include <nlohmann/json.hpp>

namespace ub {

using nlohmann::json;

namespace {

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw parse_error("bad-json", "malformed JSON input");
  return j;
}

std::string str_field(const json& j) {
  if (!j.is_string())
    throw parse_error("bad-schema", "expected a string, got " +
                                        std::string(j.type_name()));
  return j.get<std::string>();
}

Rat dist_field(const json& j) {
  Rat r = Rat::parse(str_field(j));
  if (r.negative()) throw parse_error("bad-schema", "negative distance");
  return r;
}

}  // namespace

Space parse_space(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object() || !j.contains("points") || !j.contains("matrix"))
    throw parse_error("bad-schema", "space needs \"points\" and \"matrix\"");
  std::vector<std::string> points;
  for (const json& p : j.at("points")) points.push_back(str_field(p));
  std::vector<std::vector<Rat>> matrix;
  for (const json& row : j.at("matrix")) {
    std::vector<Rat> r;
    for (const json& cell : row) r.push_back(dist_field(cell));
    matrix.push_back(std::move(r));
  }
  return Space(std::move(points), std::move(matrix));
}

json space_json(const Space& space) {
  json j;
  j["points"] = space.points();
  json matrix = json::array();
  for (int i = 0; i < space.size(); ++i) {
    json row = json::array();
    for (int k = 0; k < space.size(); ++k) row.push_back(space.dist(i, k).str());
    matrix.push_back(std::move(row));
  }
  j["matrix"] = std::move(matrix);
  return j;
}

LabeledTree parse_tree(const std::string& text) {
  json j = parse_text(text);
  LabeledTree t;
  int labeled_nodes = 0, total_nodes = 0;
  std::function<int(const json&, int)> walk = [&](const json& node,
                                                  int parent) {
    if (!node.is_object())
      throw parse_error("bad-schema", "tree node must be an object");
    int id = t.node_count();
    t.nodes.push_back({});
    t.nodes[id].parent = parent;
    ++total_nodes;
    if (node.contains("label")) {
      Rat l = dist_field(node.at("label"));
      t.nodes[id].label = l;
      ++labeled_nodes;
    }
    const json kids = node.contains("children") ? node.at("children")
                                                : json::array();
    if (!kids.is_array())
      throw parse_error("bad-schema", "\"children\" must be an array");
    if (kids.empty()) {
      if (!node.contains("ball") || !node.at("ball").is_array() ||
          node.at("ball").size() != 1)
        throw parse_error("bad-schema",
                          "tree leaves need a singleton \"ball\"");
      std::string name = str_field(node.at("ball").at(0));
      for (const std::string& existing : t.points)
        if (existing == name)
          throw parse_error("duplicate-point",
                            "leaf '" + name + "' appears twice");
      int p = static_cast<int>(t.points.size());
      t.points.push_back(name);
      t.nodes[id].members = {p};
    } else {
      for (const json& kid : kids) {
        int c = walk(kid, id);
        t.nodes[id].children.push_back(c);
        t.nodes[id].members.insert(t.nodes[id].members.end(),
                                   t.nodes[c].members.begin(),
                                   t.nodes[c].members.end());
      }
      std::sort(t.nodes[id].members.begin(), t.nodes[id].members.end());
    }
    return id;
  };
  t.root = walk(j, -1);
  if (labeled_nodes == 0) {
    t.labeled = false;
  } else if (labeled_nodes != total_nodes) {
    throw parse_error("bad-schema",
                      "either all tree nodes carry labels or none do");
  }
  return t;
}

namespace {

json tree_node_json(const LabeledTree& t, int v) {
  json j;
  json ball = json::array();
  for (int p : t.nodes[v].members) ball.push_back(t.points[p]);
  j["ball"] = std::move(ball);
  if (t.labeled) j["label"] = t.nodes[v].label.str();
  json kids = json::array();
  for (int c : t.nodes[v].children) kids.push_back(tree_node_json(t, c));
  j["children"] = std::move(kids);
  return j;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

json tree_json(const LabeledTree& tree) { return tree_node_json(tree, tree.root); }

std::string tree_dot(const LabeledTree& tree) {
  std::string out = "digraph reptree {\n";
  std::vector<int> order;
  std::function<void(int)> pre = [&](int v) {
    order.push_back(v);
    for (int c : tree.nodes[v].children) pre(c);
  };
  pre(tree.root);
  std::vector<int> pos(tree.node_count());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = (int)i;
  for (int v : order) {
    std::string caption = "{";
    for (std::size_t i = 0; i < tree.nodes[v].members.size(); ++i) {
      if (i) caption += ",";
      caption += tree.points[tree.nodes[v].members[i]];
    }
    caption += "}";
    if (tree.labeled) caption += " : " + tree.nodes[v].label.str();
    out += "  n" + std::to_string(pos[v]) + " [label=\"" +
           dot_escape(caption) + "\"];\n";
  }
  for (int v : order)
    for (int c : tree.nodes[v].children)
      out += "  n" + std::to_string(pos[v]) + " -> n" +
             std::to_string(pos[c]) + ";\n";
  out += "}\n";
  return out;
}

namespace {

json rooted_node_json(const RootedTree& t, int v) {
  json j;
  json kids = json::array();
  for (int c : t.children[v]) kids.push_back(rooted_node_json(t, c));
  j["children"] = std::move(kids);
  return j;
}

}  // namespace

json rooted_json(const RootedTree& tree) {
  return rooted_node_json(tree, tree.root);
}

std::string rooted_dot(const RootedTree& tree) {
  std::string out = "digraph tree {\n";
  std::vector<int> order;
  std::function<void(int)> pre = [&](int v) {
    order.push_back(v);
    for (int c : tree.children[v]) pre(c);
  };
  pre(tree.root);
  std::vector<int> pos(tree.children.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = (int)i;
  for (int v : order)
    out += "  n" + std::to_string(pos[v]) + " [shape=point];\n";
  for (int v : order)
    for (int c : tree.children[v])
      out += "  n" + std::to_string(pos[v]) + " -> n" +
             std::to_string(pos[c]) + ";\n";
  out += "}\n";
  return out;
}

SetFamily parse_family(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object() || !j.contains("points") || !j.contains("family"))
    throw parse_error("bad-schema", "family needs \"points\" and \"family\"");
  std::vector<std::string> universe;
  for (const json& p : j.at("points")) universe.push_back(str_field(p));
  std::vector<std::vector<int>> family;
  for (const json& member : j.at("family")) {
    std::vector<int> idx;
    for (const json& name : member) {
      std::string s = str_field(name);
      auto it = std::find(universe.begin(), universe.end(), s);
      if (it == universe.end())
        throw parse_error("unknown-point",
                          "family member names unknown point '" + s + "'");
      idx.push_back(static_cast<int>(it - universe.begin()));
    }
    family.push_back(std::move(idx));
  }
  return SetFamily(std::move(universe), std::move(family));
}

json family_json(const SetFamily& f) {
  json j;
  j["points"] = f.universe;
  json family = json::array();
  for (const auto& member : f.family) {
    json names = json::array();
    for (int i : member) names.push_back(f.universe[i]);
    family.push_back(std::move(names));
  }
  j["family"] = std::move(family);
  return j;
}

json ballean_json(const BalleanSpace& bs) {
  json j;
  j["base"] = space_json(bs.base);
  json balls = json::array();
  for (std::size_t i = 0; i < bs.balls.size(); ++i) {
    json b;
    b["id"] = bs.ids[i];
    json members = json::array();
    for (int p : bs.balls[i].members) members.push_back(bs.base.point(p));
    b["members"] = std::move(members);
    balls.push_back(std::move(b));
  }
  j["balls"] = std::move(balls);
  json h = json::array();
  for (int i = 0; i < bs.hspace.size(); ++i) {
    json row = json::array();
    for (int k = 0; k < bs.hspace.size(); ++k)
      row.push_back(bs.hspace.dist(i, k).str());
    h.push_back(std::move(row));
  }
  j["hmatrix"] = std::move(h);
  return j;
}

json metric_report_json(const MetricReport& rep, const Space& space) {
  json j;
  j["is_metric"] = rep.is_metric;
  j["is_ultrametric"] = rep.is_ultrametric;
  auto witness = [&](const std::array<int, 3>& w) {
    return json::array(
        {space.point(w[0]), space.point(w[1]), space.point(w[2])});
  };
  if (rep.metric_witness) j["metric_witness"] = witness(*rep.metric_witness);
  if (rep.ultra_witness)
    j["ultrametric_witness"] = witness(*rep.ultra_witness);
  return j;
}

json tree_check_json(const TreeCheckReport& rep) {
  json j;
  j["pass"] = rep.pass;
  json v = json::array();
  for (const TreeCheckViolation& violation : rep.violations) {
    json item;
    item["node"] = violation.node;
    item["rule"] = violation.rule;
    item["detail"] = violation.detail;
    v.push_back(std::move(item));
  }
  j["violations"] = std::move(v);
  return j;
}

json family_report_json(const FamilyReport& rep, const SetFamily& f) {
  json j;
  j["is_ballean"] = rep.is_ballean;
  j["missing_universe"] = rep.missing_universe;
  json missing = json::array();
  for (int i : rep.missing_singletons) missing.push_back(f.universe[i]);
  j["missing_singletons"] = std::move(missing);
  if (rep.crossing_pair) {
    auto member_names = [&](int idx) {
      json names = json::array();
      for (int i : f.family[idx]) names.push_back(f.universe[i]);
      return names;
    };
    j["crossing_pair"] = json::array({member_names(rep.crossing_pair->first),
                                      member_names(rep.crossing_pair->second)});
  }
  return j;
}

json ballean_check_json(const BalleanCheckReport& rep) {
  json j;
  j["pass"] = rep.pass;
  j["expected_parts"] = rep.expected_parts;
  j["actual_parts"] = rep.actual_parts;
  j["parts"] = rep.parts;
  return j;
}

std::vector<int> parse_subset(const Space& space, const std::string& text) {
  json j = parse_text(text);
  if (!j.is_array())
    throw parse_error("bad-schema", "subset must be an array of point names");
  std::vector<int> out;
  for (const json& name : j) out.push_back(space.index_of(str_field(name)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

json ball_json(const Space& space, const Ball& ball) {
  json j;
  json members = json::array();
  for (int p : ball.members) members.push_back(space.point(p));
  j["members"] = std::move(members);
  j["diameter"] = ball.diameter.str();
  return j;
}

}  // namespace ub

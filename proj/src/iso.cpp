#include "ultraball/iso.hpp"

#include <algorithm>
#include <cstdint>

namespace ub {

namespace {

template <typename ChildrenOf, typename LabelOf>
std::string encode(int v, const ChildrenOf& children_of,
                   const LabelOf& label_of) {
  std::vector<std::string> kids;
  for (int c : children_of(v)) kids.push_back(encode(c, children_of, label_of));
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  out += label_of(v);
  for (const std::string& k : kids) out += k;
  out += ")";
  return out;
}

}  // namespace

std::string canonical_form(const LabeledTree& tree, bool labeled) {
  if (labeled && !tree.labeled)
    throw Error("unlabeled-tree", "labeled mode on an unlabeled tree");
  auto children_of = [&](int v) -> const std::vector<int>& {
    return tree.nodes[v].children;
  };
  auto label_of = [&](int v) {
    return labeled ? tree.nodes[v].label.frac() + ";" : std::string();
  };
  return encode(tree.root, children_of, label_of);
}

std::string canonical_form(const RootedTree& tree) {
  auto children_of = [&](int v) -> const std::vector<int>& {
    return tree.children[v];
  };
  auto label_of = [](int) { return std::string(); };
  return encode(tree.root, children_of, label_of);
}

std::string canon_digest(const std::string& encoding) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : encoding) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

bool is_isomorphic(const LabeledTree& a, const LabeledTree& b, bool labeled) {
  return canonical_form(a, labeled) == canonical_form(b, labeled);
}

bool is_isomorphic(const RootedTree& a, const RootedTree& b) {
  return canonical_form(a) == canonical_form(b);
}

bool is_isometric(const Space& a, const Space& b) {
  a.require_ultrametric();
  b.require_ultrametric();
  if (a.size() != b.size()) return false;
  return is_isomorphic(build_tree(a), build_tree(b), true);
}

}  // namespace ub

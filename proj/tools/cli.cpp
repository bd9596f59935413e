// Command-line front end for the ultraball shared library. Every subcommand
// reads JSON documents, calls the C API, and prints JSON (or DOT for
// tree-valued results with --format dot).
//
// Exit status: 0 on success, 1 on domain errors (structured error document
// on stdout), 2 on I/O, parse, or schema errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ultraball.h"

namespace {

int fail_io(const std::string& message) {
  std::cout << "{\"code\":\"io-error\",\"message\":\"" << message << "\"}\n";
  return 2;
}

bool read_file(const std::string& path, std::string& out) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    out = ss.str();
    return true;
  }
  std::ifstream in(path);
  if (!in) return false;
  std::stringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

int emit(const std::string& doc, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << doc << "\n";
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) return fail_io("cannot open output file " + out_path);
  out << doc << "\n";
  return 0;
}

// Maps a C API status to the documented exit codes and prints the error doc.
int report_failure(ub_status st) {
  std::cout << ub_last_error() << "\n";
  return st == UB_ERR_DOMAIN ? 1 : 2;
}

struct StrOut {
  char* ptr = nullptr;
  ~StrOut() { ub_free_str(ptr); }
  std::string str() const { return ptr ? ptr : ""; }
};

using SpacePtr = std::unique_ptr<ub_space, decltype(&ub_space_free)>;
using TreePtr = std::unique_ptr<ub_tree, decltype(&ub_tree_free)>;
using FamilyPtr = std::unique_ptr<ub_family, decltype(&ub_family_free)>;

int load_space(const std::string& path, SpacePtr& out, int& exit_code) {
  std::string text;
  if (!read_file(path, text)) {
    exit_code = fail_io("cannot read " + path);
    return -1;
  }
  ub_space* raw = nullptr;
  ub_status st = ub_space_parse(text.c_str(), &raw);
  if (st != UB_OK) {
    exit_code = report_failure(st);
    return -1;
  }
  out.reset(raw);
  return 0;
}

int load_tree(const std::string& path, TreePtr& out, int& exit_code) {
  std::string text;
  if (!read_file(path, text)) {
    exit_code = fail_io("cannot read " + path);
    return -1;
  }
  ub_tree* raw = nullptr;
  ub_status st = ub_tree_parse(text.c_str(), &raw);
  if (st != UB_OK) {
    exit_code = report_failure(st);
    return -1;
  }
  out.reset(raw);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ultraball: finite ultrametric spaces, representing trees, "
               "balleans and the Hausdorff metric"};
  app.require_subcommand(1);

  std::string in_path, in2_path, out_path, format = "json";
  std::string center, radius, point_x, point_y, subset_a, subset_b, labels;
  int n = 0;
  std::uint64_t seed = 0;
  bool stats = false, labeled = false;

  auto add_io = [&](CLI::App* cmd, bool need_in = true) {
    auto* opt = cmd->add_option("--in", in_path, "input file ('-' for stdin)");
    if (need_in) opt->required();
    cmd->add_option("--out", out_path, "output file (default stdout)");
  };

  auto* c_validate = app.add_subcommand("validate", "metric/ultrametric report");
  add_io(c_validate);

  auto* c_tree = app.add_subcommand("tree", "representing tree of a space");
  add_io(c_tree);
  c_tree->add_option("--format", format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));

  auto* c_dist = app.add_subcommand("dist", "distance via the representing tree");
  add_io(c_dist);
  c_dist->add_option("--x", point_x, "first point")->required();
  c_dist->add_option("--y", point_y, "second point")->required();

  auto* c_ballean = app.add_subcommand("ballean",
                                       "all balls and the Hausdorff matrix");
  add_io(c_ballean);
  c_ballean->add_flag("--check", stats,
                      "run the diametrical-structure check instead");

  auto* c_hausdorff = app.add_subcommand("hausdorff",
                                         "Hausdorff distance of two subsets");
  add_io(c_hausdorff);
  c_hausdorff->add_option("--a", subset_a, "subset JSON file")->required();
  c_hausdorff->add_option("--b", subset_b, "subset JSON file")->required();

  auto* c_iterate = app.add_subcommand("iterate", "iterated ballean space");
  add_io(c_iterate);
  c_iterate->add_option("--n", n, "iteration count")->required();
  c_iterate->add_flag("--stats", stats, "emit point count and diameter only");

  auto* c_transform = app.add_subcommand(
      "transform", "add a leaf to every internal vertex of a tree");
  add_io(c_transform);
  c_transform->add_option("--format", format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));

  auto* c_check = app.add_subcommand("check-tree",
                                     "realizability conditions for given n");
  add_io(c_check);
  c_check->add_option("--n", n, "condition level (0 = representing tree)");

  auto* c_vfam = app.add_subcommand("validate-family",
                                    "is the family a ballean?");
  add_io(c_vfam);

  auto* c_reconstruct = app.add_subcommand(
      "reconstruct", "ultrametric realizing a valid family");
  add_io(c_reconstruct);

  auto* c_isometric = app.add_subcommand("isometric",
                                         "decide isometry of two spaces");
  add_io(c_isometric);
  c_isometric->add_option("--in2", in2_path, "second space file")->required();

  auto* c_canon = app.add_subcommand("canon", "canonical form of a tree");
  add_io(c_canon);
  c_canon->add_flag("--labeled", labeled, "labeled isomorphism mode");

  auto* c_ball = app.add_subcommand("ball", "closed ball around a center");
  add_io(c_ball);
  c_ball->add_option("--center", center, "center point")->required();
  c_ball->add_option("--radius", radius, "radius (decimal or fraction)")
      ->required();

  auto* c_gen = app.add_subcommand("gen", "random ultrametric space");
  add_io(c_gen, false);
  c_gen->add_option("--n", n, "number of points")->required();
  c_gen->add_option("--seed", seed, "RNG seed");
  c_gen->add_option("--labels", labels, "comma-separated label set");

  CLI11_PARSE(app, argc, argv);

  int exit_code = 0;

  if (c_validate->parsed()) {
    SpacePtr space(nullptr, ub_space_free);
    if (load_space(in_path, space, exit_code)) return exit_code;
    StrOut report;
    ub_status st = ub_space_validate(space.get(), &report.ptr);
    if (st != UB_OK) return report_failure(st);
    return emit(report.str(), out_path);
  }

  if (c_tree->parsed()) {
    SpacePtr space(nullptr, ub_space_free);
    if (load_space(in_path, space, exit_code)) return exit_code;
    TreePtr tree(nullptr, ub_tree_free);
    ub_tree* raw = nullptr;
    ub_status st = ub_space_rep_tree(space.get(), &raw);
    if (st != UB_OK) return report_failure(st);
    tree.reset(raw);
    StrOut doc;
    st = format == "dot" ? ub_tree_to_dot(tree.get(), &doc.ptr)
                         : ub_tree_to_json(tree.get(), &doc.ptr);
    if (st != UB_OK) return report_failure(st);
    return emit(doc.str(), out_path);
  }

  if (c_dist->parsed()) {
    SpacePtr space(nullptr, ub_space_free);
    if (load_space(in_path, space, exit_code)) return exit_code;
    ub_tree* raw = nullptr;
    ub_status st = ub_space_rep_tree(space.get(), &raw);
    if (st != UB_OK) return report_failure(st);
    TreePtr tree(raw, ub_tree_free);
    StrOut dist;
    st = ub_tree_distance(tree.get(), point_x.c_str(), point_y.c_str(),
                          &dist.ptr);
    if (st != UB_OK) return report_failure(st);
    return emit("{\"dist\":\"" + dist.str() + "\"}", out_path);
  }

  if (c_ballean->parsed()) {
    SpacePtr space(nullptr, ub_space_free);
    if (load_space(in_path, space, exit_code)) return exit_code;
    StrOut doc;
    ub_status st = stats ? ub_space_ballean_check(space.get(), &doc.ptr)
                         : ub_space_ballean(space.get(), &doc.ptr);
    if (st != UB_OK) return report_failure(st);
    return emit(doc.str(), out_path);
  }

  if (c_hausdorff->parsed()) {
    SpacePtr space(nullptr, ub_space_free);
    if (load_space(in_path, space, exit_code)) return exit_code;
    std::string a_text, b_text;
    if (!read_file(subset_a, a_text)) return fail_io("cannot read " + subset_a);
    if (!read_file(subset_b, b_text)) return fail_io("cannot read " + subset_b);
    StrOut dist;
    ub_status st = ub_space_hausdorff(space.get(), a_text.c_str(),
                                      b_text.c_str(), &dist.ptr);
    if (st != UB_OK) return report_failure(st);
    return emit("{\"dist\":\"" + dist.str() + "\"}", out_path);
  }

  if (c_iterate->parsed()) {
    SpacePtr space(nullptr, ub_space_free);
    if (load_space(in_path, space, exit_code)) return exit_code;
    ub_space* raw = nullptr;
    ub_status st = ub_space_iterate(space.get(), n, &raw);
    if (st != UB_OK) return report_failure(st);
    SpacePtr result(raw, ub_space_free);
    StrOut doc;
    st = stats ? ub_space_stats(result.get(), &doc.ptr)
               : ub_space_to_json(result.get(), &doc.ptr);
    if (st != UB_OK) return report_failure(st);
    return emit(doc.str(), out_path);
  }

  if (c_transform->parsed()) {
    TreePtr tree(nullptr, ub_tree_free);
    if (load_tree(in_path, tree, exit_code)) return exit_code;
    StrOut doc;
    ub_status st = format == "dot"
                       ? ub_tree_add_leaves_dot(tree.get(), &doc.ptr)
                       : ub_tree_add_leaves_json(tree.get(), &doc.ptr);
    if (st != UB_OK) return report_failure(st);
    return emit(doc.str(), out_path);
  }

  if (c_check->parsed()) {
    TreePtr tree(nullptr, ub_tree_free);
    if (load_tree(in_path, tree, exit_code)) return exit_code;
    StrOut doc;
    ub_status st = ub_tree_check(tree.get(), n, &doc.ptr);
    if (st != UB_OK) return report_failure(st);
    return emit(doc.str(), out_path);
  }

  if (c_vfam->parsed()) {
    std::string text;
    if (!read_file(in_path, text)) return fail_io("cannot read " + in_path);
    ub_family* raw = nullptr;
    ub_status st = ub_family_parse(text.c_str(), &raw);
    if (st != UB_OK) return report_failure(st);
    FamilyPtr family(raw, ub_family_free);
    StrOut doc;
    st = ub_family_validate(family.get(), &doc.ptr);
    if (st != UB_OK) return report_failure(st);
    // A family that fails validation is a domain error: exit 1 with the
    // report as witness.
    if (doc.str().find("\"is_ballean\":true") == std::string::npos) {
      std::cout << "{\"code\":\"not-a-ballean\",\"message\":\"family is not "
                   "the ballean of any ultrametric\",\"witness\":"
                << doc.str() << "}\n";
      return 1;
    }
    return emit(doc.str(), out_path);
  }

  if (c_reconstruct->parsed()) {
    std::string text;
    if (!read_file(in_path, text)) return fail_io("cannot read " + in_path);
    ub_family* raw = nullptr;
    ub_status st = ub_family_parse(text.c_str(), &raw);
    if (st != UB_OK) return report_failure(st);
    FamilyPtr family(raw, ub_family_free);
    ub_space* sraw = nullptr;
    st = ub_family_reconstruct(family.get(), &sraw);
    if (st != UB_OK) return report_failure(st);
    SpacePtr space(sraw, ub_space_free);
    StrOut doc;
    st = ub_space_to_json(space.get(), &doc.ptr);
    if (st != UB_OK) return report_failure(st);
    return emit(doc.str(), out_path);
  }

  if (c_isometric->parsed()) {
    SpacePtr a(nullptr, ub_space_free), b(nullptr, ub_space_free);
    if (load_space(in_path, a, exit_code)) return exit_code;
    if (load_space(in2_path, b, exit_code)) return exit_code;
    int flag = 0;
    ub_status st = ub_space_isometric(a.get(), b.get(), &flag);
    if (st != UB_OK) return report_failure(st);
    return emit(flag ? "{\"isometric\":true}" : "{\"isometric\":false}",
                out_path);
  }

  if (c_canon->parsed()) {
    TreePtr tree(nullptr, ub_tree_free);
    if (load_tree(in_path, tree, exit_code)) return exit_code;
    StrOut encoding, digest;
    ub_status st = ub_tree_canonical(tree.get(), labeled ? 1 : 0,
                                     &encoding.ptr, &digest.ptr);
    if (st != UB_OK) return report_failure(st);
    return emit("{\"digest\":\"" + digest.str() + "\",\"encoding\":\"" +
                    encoding.str() + "\"}",
                out_path);
  }

  if (c_ball->parsed()) {
    SpacePtr space(nullptr, ub_space_free);
    if (load_space(in_path, space, exit_code)) return exit_code;
    StrOut doc;
    ub_status st = ub_space_closed_ball(space.get(), center.c_str(),
                                        radius.c_str(), &doc.ptr);
    if (st != UB_OK) return report_failure(st);
    return emit(doc.str(), out_path);
  }

  if (c_gen->parsed()) {
    ub_space* raw = nullptr;
    ub_status st = ub_gen_space(n, labels.empty() ? nullptr : labels.c_str(),
                                seed, &raw);
    if (st != UB_OK) return report_failure(st);
    SpacePtr space(raw, ub_space_free);
    StrOut doc;
    st = ub_space_to_json(space.get(), &doc.ptr);
    if (st != UB_OK) return report_failure(st);
    return emit(doc.str(), out_path);
  }

  return 0;
}

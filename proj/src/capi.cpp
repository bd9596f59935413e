#include "ultraball.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "ultraball/ballean.hpp"
#include "ultraball/gen.hpp"
#include "ultraball/iso.hpp"
#include "ultraball/json_io.hpp"
#include "ultraball/laminar.hpp"
#include "ultraball/tree.hpp"

using nlohmann::json;

struct ub_space {
  ub::Space value;
};
struct ub_tree {
  ub::LabeledTree value;
};
struct ub_family {
  ub::SetFamily value;
};

namespace {

thread_local std::string g_last_error = "{}";

void set_error(const std::string& code, const std::string& message,
               const std::string& witness_json = {}) {
  json doc;
  doc["code"] = code;
  doc["message"] = message;
  if (!witness_json.empty()) {
    json w = json::parse(witness_json, nullptr, false);
    doc["witness"] = w.is_discarded() ? json(witness_json) : w;
  }
  g_last_error = doc.dump();
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
ub_status guarded(Fn&& fn) {
  try {
    fn();
    return UB_OK;
  } catch (const ub::Error& e) {
    set_error(e.code(), e.what(), e.witness());
    return e.kind() == ub::Error::Kind::parse ? UB_ERR_PARSE : UB_ERR_DOMAIN;
  } catch (const json::exception& e) {
    set_error("bad-json", e.what());
    return UB_ERR_PARSE;
  } catch (const std::exception& e) {
    set_error("internal", e.what());
    return UB_ERR_INTERNAL;
  }
}

ub_status invalid(const char* what) {
  set_error("invalid-argument", what);
  return UB_ERR_INVALID;
}

}  // namespace

extern "C" {

const char* ub_version(void) { return "1.0.0"; }

const char* ub_last_error(void) { return g_last_error.c_str(); }

void ub_free_str(char* s) { std::free(s); }

/* --- spaces -------------------------------------------------------------- */

ub_status ub_space_parse(const char* text, ub_space** out) {
  if (!text || !out) return invalid("null argument");
  return guarded([&] { *out = new ub_space{ub::parse_space(text)}; });
}

void ub_space_free(ub_space* s) { delete s; }

ub_status ub_space_to_json(const ub_space* s, char** out) {
  if (!s || !out) return invalid("null argument");
  return guarded([&] { *out = dup_string(ub::space_json(s->value).dump()); });
}

int ub_space_point_count(const ub_space* s) {
  return s ? s->value.size() : -1;
}

ub_status ub_space_validate(const ub_space* s, char** report_json) {
  if (!s || !report_json) return invalid("null argument");
  return guarded([&] {
    *report_json =
        dup_string(ub::metric_report_json(s->value.report(), s->value).dump());
  });
}

ub_status ub_space_diam(const ub_space* s, const char* subset_json,
                        char** dist) {
  if (!s || !subset_json || !dist) return invalid("null argument");
  return guarded([&] {
    std::vector<int> subset = ub::parse_subset(s->value, subset_json);
    *dist = dup_string(ub::diam(s->value, subset).str());
  });
}

ub_status ub_space_closed_ball(const ub_space* s, const char* center,
                               const char* radius, char** ball_json) {
  if (!s || !center || !radius || !ball_json) return invalid("null argument");
  return guarded([&] {
    ub::Rat r = ub::Rat::parse(radius);
    ub::Ball b = ub::closed_ball(s->value, s->value.index_of(center), r);
    *ball_json = dup_string(ub::ball_json(s->value, b).dump());
  });
}

ub_status ub_space_enclosing_ball(const ub_space* s, const char* subset_json,
                                  char** ball_json) {
  if (!s || !subset_json || !ball_json) return invalid("null argument");
  return guarded([&] {
    std::vector<int> subset = ub::parse_subset(s->value, subset_json);
    ub::Ball b = ub::smallest_enclosing_ball(s->value, subset);
    *ball_json = dup_string(ub::ball_json(s->value, b).dump());
  });
}

ub_status ub_space_hausdorff(const ub_space* s, const char* a_json,
                             const char* b_json, char** dist) {
  if (!s || !a_json || !b_json || !dist) return invalid("null argument");
  return guarded([&] {
    std::vector<int> a = ub::parse_subset(s->value, a_json);
    std::vector<int> b = ub::parse_subset(s->value, b_json);
    *dist = dup_string(ub::hausdorff(s->value, a, b).str());
  });
}

ub_status ub_space_ballean(const ub_space* s, char** ballean_json) {
  if (!s || !ballean_json) return invalid("null argument");
  return guarded([&] {
    *ballean_json =
        dup_string(ub::ballean_json(ub::ballean_space(s->value)).dump());
  });
}

ub_status ub_space_ballean_check(const ub_space* s, char** report_json) {
  if (!s || !report_json) return invalid("null argument");
  return guarded([&] {
    *report_json = dup_string(
        ub::ballean_check_json(ub::ballean_diametrical_check(s->value)).dump());
  });
}

ub_status ub_space_iterate(const ub_space* s, int n, ub_space** out) {
  if (!s || !out) return invalid("null argument");
  return guarded(
      [&] { *out = new ub_space{ub::iterate_ballean(s->value, n)}; });
}

ub_status ub_space_stats(const ub_space* s, char** stats_json) {
  if (!s || !stats_json) return invalid("null argument");
  return guarded([&] {
    std::vector<int> all(s->value.size());
    for (int i = 0; i < s->value.size(); ++i) all[i] = i;
    json j;
    j["points"] = s->value.size();
    j["diam"] = ub::diam(s->value, all).str();
    *stats_json = dup_string(j.dump());
  });
}

ub_status ub_space_family(const ub_space* s, char** family_json) {
  if (!s || !family_json) return invalid("null argument");
  return guarded([&] {
    *family_json = dup_string(ub::family_json(ub::family_of(s->value)).dump());
  });
}

ub_status ub_space_isometric(const ub_space* a, const ub_space* b, int* flag) {
  if (!a || !b || !flag) return invalid("null argument");
  return guarded(
      [&] { *flag = ub::is_isometric(a->value, b->value) ? 1 : 0; });
}

ub_status ub_space_rep_tree(const ub_space* s, ub_tree** out) {
  if (!s || !out) return invalid("null argument");
  return guarded([&] { *out = new ub_tree{ub::build_tree(s->value)}; });
}

/* --- trees --------------------------------------------------------------- */

ub_status ub_tree_parse(const char* text, ub_tree** out) {
  if (!text || !out) return invalid("null argument");
  return guarded([&] { *out = new ub_tree{ub::parse_tree(text)}; });
}

void ub_tree_free(ub_tree* t) { delete t; }

ub_status ub_tree_to_json(const ub_tree* t, char** out) {
  if (!t || !out) return invalid("null argument");
  return guarded([&] { *out = dup_string(ub::tree_json(t->value).dump()); });
}

ub_status ub_tree_to_dot(const ub_tree* t, char** out) {
  if (!t || !out) return invalid("null argument");
  return guarded([&] { *out = dup_string(ub::tree_dot(t->value)); });
}

ub_status ub_tree_distance(const ub_tree* t, const char* x, const char* y,
                           char** dist) {
  if (!t || !x || !y || !dist) return invalid("null argument");
  return guarded([&] {
    auto index_of = [&](const char* name) {
      for (std::size_t i = 0; i < t->value.points.size(); ++i)
        if (t->value.points[i] == name) return static_cast<int>(i);
      throw ub::Error("unknown-point",
                      "unknown point '" + std::string(name) + "'");
    };
    *dist = dup_string(
        ub::tree_distance(t->value, index_of(x), index_of(y)).str());
  });
}

ub_status ub_tree_check(const ub_tree* t, int n, char** report_json) {
  if (!t || !report_json) return invalid("null argument");
  return guarded([&] {
    *report_json =
        dup_string(ub::tree_check_json(ub::check_tree(t->value, n)).dump());
  });
}

ub_status ub_tree_to_space(const ub_tree* t, ub_space** out) {
  if (!t || !out) return invalid("null argument");
  return guarded([&] { *out = new ub_space{ub::space_from_tree(t->value)}; });
}

ub_status ub_tree_add_leaves_json(const ub_tree* t, char** out) {
  if (!t || !out) return invalid("null argument");
  return guarded([&] {
    *out = dup_string(ub::rooted_json(ub::add_leaf_transform(t->value)).dump());
  });
}

ub_status ub_tree_add_leaves_dot(const ub_tree* t, char** out) {
  if (!t || !out) return invalid("null argument");
  return guarded([&] {
    *out = dup_string(ub::rooted_dot(ub::add_leaf_transform(t->value)));
  });
}

ub_status ub_tree_canonical(const ub_tree* t, int labeled, char** encoding,
                            char** digest) {
  if (!t || !encoding || !digest) return invalid("null argument");
  return guarded([&] {
    std::string enc = ub::canonical_form(t->value, labeled != 0);
    *encoding = dup_string(enc);
    *digest = dup_string(ub::canon_digest(enc));
  });
}

ub_status ub_tree_isomorphic(const ub_tree* a, const ub_tree* b, int labeled,
                             int* flag) {
  if (!a || !b || !flag) return invalid("null argument");
  return guarded([&] {
    *flag = ub::is_isomorphic(a->value, b->value, labeled != 0) ? 1 : 0;
  });
}

/* --- families ------------------------------------------------------------ */

ub_status ub_family_parse(const char* text, ub_family** out) {
  if (!text || !out) return invalid("null argument");
  return guarded([&] { *out = new ub_family{ub::parse_family(text)}; });
}

void ub_family_free(ub_family* f) { delete f; }

ub_status ub_family_validate(const ub_family* f, char** report_json) {
  if (!f || !report_json) return invalid("null argument");
  return guarded([&] {
    *report_json = dup_string(
        ub::family_report_json(ub::validate_family(f->value), f->value)
            .dump());
  });
}

ub_status ub_family_reconstruct(const ub_family* f, ub_space** out) {
  if (!f || !out) return invalid("null argument");
  return guarded([&] { *out = new ub_space{ub::reconstruct(f->value)}; });
}

/* --- generation ----------------------------------------------------------- */

ub_status ub_gen_space(int leaves, const char* labels_csv, uint64_t seed,
                       ub_space** out) {
  if (!out) return invalid("null argument");
  return guarded([&] {
    ub::GenOptions opt;
    opt.leaves = leaves;
    opt.seed = seed;
    if (labels_csv && *labels_csv) {
      std::stringstream ss(labels_csv);
      std::string item;
      while (std::getline(ss, item, ','))
        opt.labels.push_back(ub::Rat::parse(item));
    }
    *out = new ub_space{ub::gen_space(opt)};
  });
}

}  // extern "C"

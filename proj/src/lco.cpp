#include "dyckbij/lco.hpp"

#include <string>

#include "dyckbij/errors.hpp"
#include "json.hpp"

namespace dyckbij {

const char* body_pos_name(BodyPos pos) noexcept {
  return pos == BodyPos::top ? "top" : "bot";
}

// The rightmost lowest DUU window of a primitive path hangs the body: with the
// window's valley at height h and j the downstep matching the window's middle
// upstep, the body is steps [h, j] and the skeleton is the leading U^h joined
// to the tail after j.  The tail starts with D (body sat above the skeleton's
// first peak) or UD (below it); it cannot start UU, or the window at j would
// be lower or further right.
Decomposition decompose(const DyckPath& p) {
  if (!is_primitive(p)) {
    fail(errc::not_primitive, "decompose needs a primitive path");
  }
  const std::string& text = p.text();
  std::vector<int> height(text.size() + 1, 0);
  for (size_t i = 0; i < text.size(); ++i) {
    height[i + 1] = height[i] + (text[i] == 'U' ? 1 : -1);
  }
  int best = -1;
  for (int t = 0; t + 2 < p.length(); ++t) {
    if (text[static_cast<size_t>(t)] == 'D' && text[static_cast<size_t>(t + 1)] == 'U' &&
        text[static_cast<size_t>(t + 2)] == 'U' &&
        (best < 0 || height[static_cast<size_t>(t + 1)] <= height[static_cast<size_t>(best + 1)])) {
      best = t;
    }
  }
  if (best < 0) fail(errc::no_duu, "path avoids DUU and has no body to split off");
  int h = height[static_cast<size_t>(best + 1)];
  int j = match_downstep(p, best + 1);
  std::string body = text.substr(static_cast<size_t>(h), static_cast<size_t>(j + 1 - h));
  std::string skeleton =
      text.substr(0, static_cast<size_t>(h)) + text.substr(static_cast<size_t>(j + 1));
  BodyPos pos = text[static_cast<size_t>(j + 1)] == 'D' ? BodyPos::top : BodyPos::bot;
  return Decomposition{unchecked_path(std::move(skeleton)), unchecked_path(std::move(body)), pos};
}

DyckPath recompose(const DyckPath& skeleton, const DyckPath& body, BodyPos pos) {
  if (!is_primitive(skeleton)) {
    fail(errc::not_primitive, "skeleton must be primitive");
  }
  if (contains_duu(skeleton)) {
    fail(errc::contains_duu, "skeleton must avoid DUU");
  }
  if (body.empty()) {
    if (pos == BodyPos::bot) {
      fail(errc::invalid_body, "an empty body can only sit on top");
    }
    return skeleton;
  }
  if (is_primitive(body) || !ends_with(body, "DD")) {
    fail(errc::invalid_body, "body must be non-primitive and end DD");
  }
  if (pos == BodyPos::bot && skeleton.size() == 1) {
    fail(errc::bot_with_unit_skeleton, "a size-1 skeleton has no room below its peak");
  }
  const std::string& s = skeleton.text();
  size_t u = s.find("UD");  // first peak upstep; skeleton starts U^{u+1}
  size_t cut = pos == BodyPos::bot ? u : u + 1;
  std::string out = s.substr(0, cut) + body.text() + s.substr(cut);
  return unchecked_path(std::move(out));
}

namespace {

LcoVertex vertex_of(const DyckPath& component) {
  LcoVertex v;
  if (!contains_duu(component)) {
    v.label = path_to_composition(component);
    return v;
  }
  Decomposition d = decompose(component);
  v.label = path_to_composition(d.skeleton);
  if (composition_size(v.label) >= 2) v.color = d.pos;
  for (const DyckPath& part : components(d.body)) {
    v.children.push_back(vertex_of(part));
  }
  return v;
}

[[noreturn]] void bad_vertex(const std::string& where, const std::string& why) {
  fail(errc::invalid_forest, where + ": " + why);
}

void check_vertex(const LcoVertex& v, const std::string& where) {
  if (v.label.empty()) bad_vertex(where, "label is empty");
  for (int e : v.label) {
    if (e < 1) bad_vertex(where, "label entry " + std::to_string(e) + " is not positive");
  }
  if (v.label.back() != 1) bad_vertex(where, "label does not end in 1");
  if (v.children.size() == 1) bad_vertex(where, "vertex has exactly one child");
  bool needs_color = !v.children.empty() && composition_size(v.label) >= 2;
  if (needs_color && !v.color) bad_vertex(where, "missing color");
  if (!needs_color && v.color) bad_vertex(where, "color on a vertex that admits none");
  if (!v.children.empty()) {
    const LcoVertex& last = v.children.back();
    if (last.children.empty() && composition_size(last.label) < 2) {
      bad_vertex(where, "rightmost child is a unit leaf");
    }
  }
  for (size_t i = 0; i < v.children.size(); ++i) {
    check_vertex(v.children[i], where + ".children[" + std::to_string(i) + "]");
  }
}

void check_forest(const LcoForest& f) {
  for (size_t i = 0; i < f.trees.size(); ++i) {
    check_vertex(f.trees[i], "trees[" + std::to_string(i) + "]");
  }
}

DyckPath build_path(const LcoVertex& v) {
  DyckPath skeleton = composition_to_path(v.label);
  if (v.children.empty()) return skeleton;
  std::vector<DyckPath> parts;
  parts.reserve(v.children.size());
  for (const LcoVertex& child : v.children) parts.push_back(build_path(child));
  return recompose(skeleton, concat(parts), v.color.value_or(BodyPos::top));
}

LcoVertex map_vertex(const LcoVertex& v) {
  LcoVertex out;
  out.label = forward(v.label);
  if (v.color) {
    out.color = parity(v.label) == 1 ? *v.color
                                     : (*v.color == BodyPos::top ? BodyPos::bot : BodyPos::top);
  }
  out.children.reserve(v.children.size());
  for (const LcoVertex& child : v.children) out.children.push_back(map_vertex(child));
  return out;
}

int bits_of(int x) {
  int b = 0;
  while (x > 0) {
    ++b;
    x >>= 1;
  }
  return b;
}

int vertex_exponent(const LcoVertex& v) {
  int s = composition_size(v.label);
  int k = v.color ? bits_of(s - 1) : bits_of(s >= 2 ? s - 2 : 0);
  for (const LcoVertex& child : v.children) k = std::max(k, vertex_exponent(child));
  return k;
}

}  // namespace

LcoForest path_to_forest(const DyckPath& p) {
  LcoForest f;
  for (const DyckPath& component : components(p)) {
    f.trees.push_back(vertex_of(component));
  }
  return f;
}

DyckPath forest_to_path(const LcoForest& f) {
  check_forest(f);
  std::vector<DyckPath> parts;
  parts.reserve(f.trees.size());
  for (const LcoVertex& tree : f.trees) parts.push_back(build_path(tree));
  return concat(parts);
}

LcoForest forward(const LcoForest& f) {
  check_forest(f);
  LcoForest out;
  out.trees.reserve(f.trees.size());
  for (const LcoVertex& tree : f.trees) out.trees.push_back(map_vertex(tree));
  return out;
}

int predict_orbit_exponent(const LcoForest& f) {
  check_forest(f);
  int k = 0;
  for (const LcoVertex& tree : f.trees) k = std::max(k, vertex_exponent(tree));
  return k;
}

namespace {

using nlohmann::json;

json vertex_to_json(const LcoVertex& v) {
  json j;
  j["label"] = v.label;
  if (v.color) j["color"] = body_pos_name(*v.color);
  if (!v.children.empty()) {
    json kids = json::array();
    for (const LcoVertex& child : v.children) kids.push_back(vertex_to_json(child));
    j["children"] = std::move(kids);
  }
  return j;
}

LcoVertex vertex_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) bad_vertex(where, "vertex is not an object");
  for (const auto& [key, value] : j.items()) {
    if (key != "label" && key != "color" && key != "children") {
      bad_vertex(where, "unknown key \"" + key + "\"");
    }
  }
  if (!j.contains("label") || !j["label"].is_array()) {
    bad_vertex(where, "missing label array");
  }
  LcoVertex v;
  for (const json& e : j["label"]) {
    if (!e.is_number_integer()) bad_vertex(where, "label entry is not an integer");
    v.label.push_back(e.get<int>());
  }
  if (j.contains("color")) {
    if (!j["color"].is_string()) bad_vertex(where, "color is not a string");
    std::string c = j["color"].get<std::string>();
    if (c == "top") {
      v.color = BodyPos::top;
    } else if (c == "bot") {
      v.color = BodyPos::bot;
    } else {
      bad_vertex(where, "color must be \"top\" or \"bot\", got \"" + c + "\"");
    }
  }
  if (j.contains("children")) {
    if (!j["children"].is_array()) bad_vertex(where, "children is not an array");
    size_t i = 0;
    for (const json& child : j["children"]) {
      v.children.push_back(vertex_from_json(child, where + ".children[" + std::to_string(i) + "]"));
      ++i;
    }
  }
  return v;
}

}  // namespace

std::string forest_to_json(const LcoForest& f) {
  json j;
  json trees = json::array();
  for (const LcoVertex& tree : f.trees) trees.push_back(vertex_to_json(tree));
  j["trees"] = std::move(trees);
  return j.dump();
}

LcoForest forest_from_json(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) fail(errc::invalid_forest, "malformed JSON");
  if (!j.is_object() || !j.contains("trees") || !j["trees"].is_array()) {
    fail(errc::invalid_forest, "document must be an object with a \"trees\" array");
  }
  for (const auto& [key, value] : j.items()) {
    if (key != "trees") fail(errc::invalid_forest, "unknown key \"" + key + "\"");
  }
  LcoForest f;
  size_t i = 0;
  for (const json& tree : j["trees"]) {
    f.trees.push_back(vertex_from_json(tree, "trees[" + std::to_string(i) + "]"));
    ++i;
  }
  return f;
}

}  // namespace dyckbij

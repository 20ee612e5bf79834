#ifndef DYCKBIJ_LCO_HPP
#define DYCKBIJ_LCO_HPP

#include <optional>
#include <string>
#include <vector>

#include "dyckbij/composition.hpp"
#include "dyckbij/path.hpp"

namespace dyckbij {

// Insertion side relative to the first peak upstep of a skeleton.
enum class BodyPos { top, bot };

const char* body_pos_name(BodyPos pos) noexcept;

// A primitive path containing DUU splits uniquely as skeleton + body: the
// body is the balanced window hanging off the rightmost lowest DUU, the
// skeleton is what remains (primitive, DUU-avoiding), and pos records which
// side of the skeleton's first peak upstep the body came from.  A skeleton of
// size 1 (UD) forces pos = top.
struct Decomposition {
  DyckPath skeleton;
  DyckPath body;  // nonempty, non-primitive, ends DD
  BodyPos pos;
};

Decomposition decompose(const DyckPath& p);  // not_primitive / no_duu

// Inverse of decompose.  skeleton must be primitive and DUU-avoiding; body
// must be empty (returning the skeleton unchanged, top only) or non-primitive
// ending DD; pos = bot needs skeleton size >= 2.
DyckPath recompose(const DyckPath& skeleton, const DyckPath& body, BodyPos pos);

// Forest of labeled colored ordered trees encoding a Dyck path, one tree per
// primitive component.  Labels are compositions ending 1; no vertex has
// exactly one child; a color is present exactly on vertices with children and
// label size >= 2; a rightmost child that is a leaf has label size >= 2.
struct LcoVertex {
  Composition label;
  std::optional<BodyPos> color;
  std::vector<LcoVertex> children;
};

struct LcoForest {
  std::vector<LcoVertex> trees;
};

LcoForest path_to_forest(const DyckPath& p);

// Validates the whole forest first (invalid_forest names the offending vertex
// as e.g. "trees[2].children[0]"), then rebuilds the path.
DyckPath forest_to_path(const LcoForest& f);

// The bijection transported to forests: every label c becomes forward(c) and
// a color survives or switches according as the label length is odd or even.
// Conjugate to forward() on paths through the codec.
LcoForest forward(const LcoForest& f);

// log2 of the forward-orbit length of the encoded path, read off the shape:
// the max over vertices of bits(s-1) when colored and bits(max(s-2,0)) when
// not, where s is the label size.
int predict_orbit_exponent(const LcoForest& f);

// JSON codec.  Canonical form: objects with "label", optional "color"
// ("top"/"bot", present only when the vertex is colored), and "children"
// (omitted when empty); top level {"trees": [...]}.  Serialization of a
// decoded canonical document is byte-identical.
std::string forest_to_json(const LcoForest& f);
LcoForest forest_from_json(const std::string& text);

}  // namespace dyckbij

#endif

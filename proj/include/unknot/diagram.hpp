#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace unknot {

/// Four edge labels listed counterclockwise, starting at the incoming under-strand.
/// Slots 0 and 2 carry the under-strand, slots 1 and 3 the over-strand.
using Crossing = std::array<int, 4>;

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

class ValidationError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised by operations that only make sense for one-component diagrams.
class MultiComponentError : public std::runtime_error {
public:
  explicit MultiComponentError(int components)
      : std::runtime_error("diagram has " + std::to_string(components) +
                           " components; a knot is required"),
        components_(components) {}
  int components() const noexcept { return components_; }

private:
  int components_;
};

enum class BracketStyle { Square, Round };

/// A planar diagram code. Value type; every operation returns a new diagram.
struct Diagram {
  std::vector<Crossing> crossings;
  int label_base = 0;  // base of the text this diagram was parsed from

  int size() const noexcept { return static_cast<int>(crossings.size()); }
  bool empty() const noexcept { return crossings.empty(); }
  bool operator==(const Diagram& o) const { return crossings == o.crossings; }
};

/// One pass of the knot through a crossing.
struct GaussEntry {
  int crossing;
  bool over;
  int sign;
  bool operator==(const GaussEntry&) const = default;
};

using GaussCode = std::vector<GaussEntry>;
using CanonicalCode = std::string;

Diagram parse_pd(std::string_view text);
std::string serialize_pd(const Diagram& d, BracketStyle style = BracketStyle::Square);

/// Throws ValidationError unless every label in [0, 2n) occurs exactly twice.
void validate(const Diagram& d);

int component_count(const Diagram& d);
void require_knot(const Diagram& d);

/// Crossing signs (+1/-1) by the right-hand rule, using the traversal orientation.
std::vector<int> crossing_signs(const Diagram& d);

Diagram change_crossing(const Diagram& d, int index);
Diagram change_crossings(const Diagram& d, const std::vector<int>& indices);
Diagram mirror(const Diagram& d);

/// Cuts edge e1 of d1 and e2 of d2 and splices the two knots together.
/// The result keeps d1's crossings first, then d2's.
Diagram connected_sum(const Diagram& d1, int e1, const Diagram& d2, int e2);

struct OverlayConfig {
  int depth = 2;           // number of R2 pushes of the d1 band into d2
  int max_crossings = 400;
  int edge1 = 0;
  int edge2 = 0;
};

class CrossingBudgetError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Connected sum whose d1 band is pushed across d2 strands by `depth` R2 moves,
/// alternating over and under.
Diagram overlay_sum(const Diagram& d1, const Diagram& d2, const OverlayConfig& config = {});

GaussCode to_gauss_code(const Diagram& d);
/// Lexicographically minimal Gauss code over every basepoint and both directions.
CanonicalCode canonical_code(const Diagram& d);

/// Re-labels edges consecutively along the traversal and rotates crossings so that
/// slot 0 is the incoming under-strand. Crossing order is kept.
Diagram relabeled(const Diagram& d);

}  // namespace unknot

#include "unknot/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "unknot/planar.hpp"

namespace unknot {

namespace {

class PdParser {
public:
  explicit PdParser(std::string_view text) : text_(text) {}

  std::vector<Crossing> parse() {
    std::vector<Crossing> out;
    skip_space();
    expect('[');
    skip_space();
    if (peek() == ']') {
      ++pos_;
    } else {
      while (true) {
        out.push_back(tuple());
        skip_space();
        char c = peek();
        if (c == ',') {
          ++pos_;
          continue;
        }
        if (c == ']') {
          ++pos_;
          break;
        }
        throw ParseError("expected ',' or ']'", pos_);
      }
    }
    skip_space();
    if (pos_ != text_.size()) throw ParseError("trailing characters", pos_);
    return out;
  }

private:
  Crossing tuple() {
    skip_space();
    char open = peek();
    if (open != '[' && open != '(') throw ParseError("expected '[' or '('", pos_);
    char close = open == '[' ? ']' : ')';
    ++pos_;
    Crossing x{};
    for (int i = 0; i < 4; ++i) {
      if (i > 0) {
        skip_space();
        if (peek() == close) throw ParseError("tuple has " + std::to_string(i) + " entries, expected 4", pos_);
        expect(',');
      }
      x[i] = integer();
    }
    skip_space();
    if (peek() == ',') throw ParseError("tuple has more than 4 entries", pos_);
    expect(close);
    return x;
  }

  int integer() {
    skip_space();
    std::size_t start = pos_;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected integer", start);
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000'000) throw ParseError("integer too large", start);
      ++pos_;
    }
    if (negative) throw ParseError("negative edge label", start);
    return static_cast<int>(v);
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Orientation of every crossing: under and over entry positions.
struct Orientation {
  std::vector<int> under_entry;
  std::vector<int> over_entry;
};

Orientation orient(const Diagram& d) {
  auto g = planar::Graph::from_diagram(d);
  auto t = planar::traverse(g);
  Orientation o;
  for (int c = 0; c < d.size(); ++c) {
    o.under_entry.push_back(planar::position_of(t.under_entry[c]));
    o.over_entry.push_back(planar::position_of(t.over_entry[c]));
  }
  return o;
}

// Rotates a crossing so the over-strand's entry becomes slot 0.
Crossing switched(const Crossing& x, int over_entry) {
  Crossing y;
  for (int p = 0; p < 4; ++p) y[p] = x[(over_entry + p) & 3];
  return y;
}

}  // namespace

void validate(const Diagram& d) {
  const int n = d.size();
  std::vector<int> count(2 * n, 0);
  for (const auto& x : d.crossings)
    for (int label : x) {
      if (label < 0 || label >= 2 * n)
        throw ValidationError("edge label " + std::to_string(label) + " outside [0, " +
                              std::to_string(2 * n - 1) + "]");
      ++count[label];
    }
  for (int label = 0; label < 2 * n; ++label)
    if (count[label] != 2)
      throw ValidationError("label " + std::to_string(label) + " occurs " +
                            std::to_string(count[label]) + " times, expected 2");
}

Diagram parse_pd(std::string_view text) {
  Diagram d;
  d.crossings = PdParser(text).parse();
  if (d.crossings.empty()) return d;

  int lo = d.crossings[0][0];
  for (const auto& x : d.crossings)
    for (int label : x) lo = std::min(lo, label);
  d.label_base = lo == 0 ? 0 : 1;

  std::map<int, int> count;
  for (auto& x : d.crossings)
    for (int& label : x) {
      label -= d.label_base;
      ++count[label];
    }
  for (const auto& [label, k] : count)
    if (k != 2)
      throw ValidationError("label " + std::to_string(label + d.label_base) + " occurs " +
                            std::to_string(k) + " times, expected 2");
  // Non-contiguous labels are compressed by rank.
  if (count.rbegin()->first != 2 * d.size() - 1 || count.begin()->first != 0) {
    std::map<int, int> rank;
    for (const auto& [label, k] : count) rank.emplace(label, static_cast<int>(rank.size()));
    for (auto& x : d.crossings)
      for (int& label : x) label = rank[label];
  }
  validate(d);
  return d;
}

std::string serialize_pd(const Diagram& d, BracketStyle style) {
  const char* open = style == BracketStyle::Square ? "[" : "(";
  const char* close = style == BracketStyle::Square ? "]" : ")";
  const char* sep = style == BracketStyle::Square ? "," : ", ";
  std::ostringstream out;
  out << '[';
  for (int c = 0; c < d.size(); ++c) {
    if (c > 0) out << sep;
    out << open;
    for (int p = 0; p < 4; ++p) {
      if (p > 0) out << sep;
      out << d.crossings[c][p];
    }
    out << close;
  }
  out << ']';
  return out.str();
}

int component_count(const Diagram& d) {
  if (d.empty()) return 1;
  return planar::traverse(planar::Graph::from_diagram(d)).components();
}

void require_knot(const Diagram& d) {
  int k = component_count(d);
  if (k != 1) throw MultiComponentError(k);
}

std::vector<int> crossing_signs(const Diagram& d) {
  auto o = orient(d);
  std::vector<int> signs(d.size());
  for (int c = 0; c < d.size(); ++c) signs[c] = planar::sign_of(o.under_entry[c], o.over_entry[c]);
  return signs;
}

Diagram change_crossing(const Diagram& d, int index) {
  if (index < 0 || index >= d.size())
    throw std::out_of_range("crossing index " + std::to_string(index) + " out of range for " +
                            std::to_string(d.size()) + " crossings");
  return change_crossings(d, {index});
}

Diagram change_crossings(const Diagram& d, const std::vector<int>& indices) {
  for (int i : indices)
    if (i < 0 || i >= d.size())
      throw std::out_of_range("crossing index " + std::to_string(i) + " out of range");
  auto o = orient(d);
  std::vector<char> flip(d.size(), 0);
  for (int i : indices) flip[i] ^= 1;
  Diagram out = d;
  for (int c = 0; c < d.size(); ++c)
    if (flip[c]) out.crossings[c] = switched(d.crossings[c], o.over_entry[c]);
  return out;
}

Diagram mirror(const Diagram& d) {
  auto o = orient(d);
  Diagram out = d;
  for (int c = 0; c < d.size(); ++c) out.crossings[c] = switched(d.crossings[c], o.over_entry[c]);
  return out;
}

namespace {

// Slot where the edge with this label is left (tail) and entered (head).
std::pair<int, int> edge_ends(const Diagram& d, const planar::Graph& g, int label) {
  if (label < 0 || label >= 2 * d.size())
    throw std::out_of_range("edge label " + std::to_string(label) + " out of range");
  auto t = planar::traverse(g);
  std::vector<char> is_entry(4 * d.size(), 0);
  for (int e : t.entries) is_entry[e] = 1;
  for (int c = 0; c < d.size(); ++c)
    for (int p = 0; p < 4; ++p)
      if (d.crossings[c][p] == label) {
        int s = planar::slot_of(c, p);
        int m = g.mate[s];
        return is_entry[s] ? std::pair{m, s} : std::pair{s, m};
      }
  throw std::out_of_range("edge label not present");
}

planar::Graph spliced(const Diagram& d1, int e1, const Diagram& d2, int e2) {
  require_knot(d1);
  require_knot(d2);
  auto g1 = planar::Graph::from_diagram(d1);
  auto g2 = planar::Graph::from_diagram(d2);
  auto [tail1, head1] = edge_ends(d1, g1, e1);
  auto [tail2, head2] = edge_ends(d2, g2, e2);
  const int offset = 4 * d1.size();
  planar::Graph g = g1;
  for (int c = 0; c < d2.size(); ++c) g.origin.push_back(d1.size() + c);
  for (int m : g2.mate) g.mate.push_back(m + offset);
  g.connect(tail1, head2 + offset);
  g.connect(tail2 + offset, head1);
  return g;
}

}  // namespace

Diagram connected_sum(const Diagram& d1, int e1, const Diagram& d2, int e2) {
  if (d1.empty()) {
    require_knot(d2);
    return d2;
  }
  if (d2.empty()) {
    require_knot(d1);
    return d1;
  }
  return planar::to_diagram(spliced(d1, e1, d2, e2));
}

Diagram overlay_sum(const Diagram& d1, const Diagram& d2, const OverlayConfig& config) {
  if (d1.empty() || d2.empty() || config.depth <= 0) {
    Diagram out = connected_sum(d1, config.edge1, d2, config.edge2);
    if (out.size() > config.max_crossings) throw CrossingBudgetError("crossing budget exceeded");
    return out;
  }
  auto g = spliced(d1, config.edge1, d2, config.edge2);
  const int n1 = d1.size();
  const int original = d1.size() + d2.size();
  // Slots belonging to the second summand's strands.
  std::vector<char> second(4 * original, 0);
  for (int s = 4 * n1; s < 4 * original; ++s) second[s] = 1;
  auto is_second_edge = [&](int s) {
    int m = g.mate[s];
    return s < 4 * original && m < 4 * original && second[s] && second[m];
  };

  // The finger starts on the splice edge leaving the first summand.
  auto [tail1, head1] = edge_ends(d1, planar::Graph::from_diagram(d1), config.edge1);
  (void)head1;
  int finger = tail1;
  for (int step = 0; step < config.depth; ++step) {
    if (g.size() + 2 > config.max_crossings) throw CrossingBudgetError("crossing budget exceeded");
    int target = -1;
    for (int s = planar::face_next(g, finger); s != finger; s = planar::face_next(g, s)) {
      if (is_second_edge(s)) {
        target = s;
        break;
      }
    }
    if (target < 0) break;
    auto pushed = planar::push_across(g, finger, target, step % 2 == 0);
    finger = pushed.tip;
  }
  return planar::to_diagram(g);
}

GaussCode to_gauss_code(const Diagram& d) {
  if (d.empty()) return {};
  require_knot(d);
  auto g = planar::Graph::from_diagram(d);
  auto t = planar::traverse(g);
  GaussCode code;
  code.reserve(t.entries.size());
  for (int e : t.entries) {
    int c = planar::crossing_of(e);
    code.push_back({c, planar::is_over(e), planar::sign_of(t.under_entry[c], t.over_entry[c])});
  }
  return code;
}

CanonicalCode canonical_code(const Diagram& d) {
  GaussCode code = to_gauss_code(d);
  const int len = static_cast<int>(code.size());
  if (len == 0) return {};
  const int n = d.size();

  // Each visit encodes as (relabelled crossing, over, sign) packed into one int.
  std::vector<int> best, cand(len);
  std::vector<int> label(n);
  for (int dir = 0; dir < 2; ++dir) {
    for (int start = 0; start < len; ++start) {
      std::fill(label.begin(), label.end(), -1);
      int next = 0;
      bool worse = false, better = best.empty();
      for (int i = 0; i < len && !worse; ++i) {
        int idx = dir == 0 ? (start + i) % len : ((start - i) % len + len) % len;
        const auto& v = code[idx];
        if (label[v.crossing] < 0) label[v.crossing] = next++;
        cand[i] = label[v.crossing] * 4 + (v.over ? 2 : 0) + (v.sign > 0 ? 1 : 0);
        if (!better) {
          if (cand[i] < best[i]) better = true;
          else if (cand[i] > best[i]) worse = true;
        }
      }
      if (better) best = cand;
    }
  }
  std::string out;
  out.reserve(2 * len);
  for (int v : best) {
    out.push_back(static_cast<char>((v >> 8) & 0xff));
    out.push_back(static_cast<char>(v & 0xff));
  }
  return out;
}

Diagram relabeled(const Diagram& d) {
  if (d.empty()) return d;
  Diagram out = planar::to_diagram(planar::Graph::from_diagram(d));
  out.label_base = d.label_base;
  return out;
}

}  // namespace unknot

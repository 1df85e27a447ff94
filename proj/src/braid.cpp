#include "unknot/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "unknot/invariants.hpp"
#include "unknot/moves.hpp"
#include "unknot/planar.hpp"
#include "unknot/rng.hpp"

namespace unknot {

void validate_braid(const BraidWord& b) {
  if (b.strands < 1) throw BraidError("a braid needs at least one strand");
  for (int l : b.letters)
    if (l == 0 || std::abs(l) >= b.strands)
      throw BraidError("letter " + std::to_string(l) + " is invalid on " + std::to_string(b.strands) +
                       " strands");
}

int braid_writhe(const BraidWord& b) {
  int w = 0;
  for (int l : b.letters) w += l > 0 ? 1 : -1;
  return w;
}

std::vector<int> braid_permutation(const BraidWord& b) {
  validate_braid(b);
  std::vector<int> at(b.strands);  // strand currently at each position
  for (int p = 0; p < b.strands; ++p) at[p] = p;
  for (int l : b.letters) {
    int i = std::abs(l);
    std::swap(at[i - 1], at[i]);
  }
  std::vector<int> perm(b.strands);
  for (int p = 0; p < b.strands; ++p) perm[at[p]] = p;
  return perm;
}

bool closure_is_knot(const BraidWord& b) {
  auto perm = braid_permutation(b);
  int len = 0, p = 0;
  do {
    p = perm[p];
    ++len;
  } while (p != 0);
  return len == b.strands;
}

Diagram closure(const BraidWord& b) {
  if (!closure_is_knot(b)) throw MultiComponentError(static_cast<int>(b.strands));
  if (b.letters.empty()) return Diagram{};
  using planar::slot_of;
  planar::Graph g;
  std::vector<int> top(b.strands, -1), bottom(b.strands, -1);
  auto attach = [&](int position, int in_slot, int out_slot) {
    if (bottom[position] < 0) top[position] = in_slot;
    else g.connect(bottom[position], in_slot);
    bottom[position] = out_slot;
  };
  for (int l : b.letters) {
    int left = std::abs(l) - 1, right = left + 1;
    int k = g.add_crossing();
    int in_left, in_right, out_left, out_right;
    if (l > 0) {
      // Under-strand runs left to right.
      in_left = slot_of(k, 0), out_left = slot_of(k, 1), out_right = slot_of(k, 2), in_right = slot_of(k, 3);
    } else {
      // Under-strand runs right to left.
      in_right = slot_of(k, 0), in_left = slot_of(k, 1), out_left = slot_of(k, 2), out_right = slot_of(k, 3);
    }
    attach(left, in_left, out_left);
    attach(right, in_right, out_right);
  }
  for (int p = 0; p < b.strands; ++p)
    if (top[p] >= 0) g.connect(bottom[p], top[p]);
  return planar::to_diagram(g);
}

BennequinBounds slice_bennequin(const BraidWord& b) {
  Diagram d = closure(b);
  BennequinBounds r;
  r.closure_crossings = d.size();
  r.simplified_crossings = global_simplify(d, 0).final.size();
  r.lower = std::abs(braid_writhe(b)) - b.strands + 1;
  r.upper = r.closure_crossings + 1 - b.strands;
  return r;
}

BraidWord braid_connected_sum(const BraidWord& b1, const BraidWord& b2) {
  validate_braid(b1);
  validate_braid(b2);
  BraidWord out;
  out.strands = b1.strands + b2.strands;
  out.letters = b1.letters;
  out.letters.push_back(b1.strands);
  for (int l : b2.letters) out.letters.push_back(l > 0 ? l + b1.strands : l - b1.strands);
  return out;
}

int IdentityWord::span() const {
  int s = 0;
  for (int l : pattern) s = std::max(s, std::abs(l));
  return s;
}

const std::vector<IdentityWord>& default_identity_library() {
  static const std::vector<IdentityWord> library = [] {
    std::vector<IdentityWord> lib{
        {"free", {1, -1}},
        {"free-inverse", {-1, 1}},
        {"braid-relation", {1, 2, 1, -2, -1, -2}},
        {"far-commutator", {1, 3, -1, -3}},
        {"far-commutator-mirror", {-1, -3, 1, 3}},
        {"braid-relation-mirror", {-1, -2, -1, 2, 1, 2}},
        {"conjugated-relation", {3, 1, 2, 1, -2, -1, -2, -3}},
    };
    verify_identity_library(lib);
    return lib;
  }();
  return library;
}

void verify_identity_library(const std::vector<IdentityWord>& library) {
  for (const auto& w : library) {
    const int strands = w.span() + 1;
    BraidWord word{strands, w.pattern};
    validate_braid(word);
    auto perm = braid_permutation(word);
    for (int p = 0; p < strands; ++p)
      if (perm[p] != p) throw BraidError("identity word '" + w.name + "' permutes strands");
    // Closures of base braids with and without the word must agree.
    std::vector<BraidWord> bases;
    BraidWord chain{strands, {}};
    for (int i = 1; i < strands; ++i) chain.letters.push_back(i);
    bases.push_back(chain);
    BraidWord twisted = chain;
    twisted.letters.insert(twisted.letters.begin(), {1, 1});
    bases.push_back(twisted);
    for (const auto& base : bases) {
      BraidWord with = base;
      with.letters.insert(with.letters.end(), w.pattern.begin(), w.pattern.end());
      Diagram a = closure(base), b = closure(with);
      if (jones(a) != jones(b) || alexander(a) != alexander(b))
        throw BraidError("identity word '" + w.name + "' changes the closure");
    }
  }
}

std::vector<IdentityWord> parse_identity_library(const std::string& text) {
  std::vector<IdentityWord> lib;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    IdentityWord w;
    if (auto colon = line.find(':'); colon != std::string::npos) {
      w.name = line.substr(0, colon);
      line = line.substr(colon + 1);
    } else {
      w.name = "word" + std::to_string(lib.size());
    }
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream nums(line);
    int v;
    while (nums >> v) w.pattern.push_back(v);
    if (w.pattern.empty()) throw BraidError("empty identity word");
    lib.push_back(std::move(w));
  }
  verify_identity_library(lib);
  return lib;
}

BraidWord insert_identity_words(const BraidWord& b, std::uint64_t seed, int count,
                                const std::vector<IdentityWord>& library, int boundary) {
  validate_braid(b);
  Rng rng(seed);
  BraidWord out = b;
  for (int k = 0; k < count; ++k) {
    // (word, base index) pairs that fit, optionally straddling the boundary.
    std::vector<std::pair<int, int>> options;
    for (int w = 0; w < static_cast<int>(library.size()); ++w) {
      int span = library[w].span();
      for (int base = 1; base + span - 1 <= out.strands - 1; ++base) {
        if (boundary > 0 && !(base <= boundary && boundary + 1 <= base + span)) continue;
        options.emplace_back(w, base);
      }
    }
    if (options.empty()) throw BraidError("no identity word fits this braid");
    auto [w, base] = options[rng.index(static_cast<int>(options.size()))];
    int pos = rng.index(static_cast<int>(out.letters.size()) + 1);
    std::vector<int> letters;
    for (int l : library[w].pattern) letters.push_back(l > 0 ? l + base - 1 : l - base + 1);
    out.letters.insert(out.letters.begin() + pos, letters.begin(), letters.end());
  }
  return out;
}

BraidWord parse_braid(const std::string& text) {
  BraidWord b;
  b.strands = -1;
  std::istringstream in(text);
  std::string line;
  std::string body;
  while (std::getline(in, line)) {
    auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    line = line.substr(start);
    if (line.rfind("strands=", 0) == 0) {
      b.strands = std::stoi(line.substr(8));
      continue;
    }
    body += line + ",";
  }
  std::replace(body.begin(), body.end(), ',', ' ');
  std::istringstream nums(body);
  std::string tok;
  while (nums >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used == 0 || used != tok.size()) throw BraidError("bad braid letter '" + tok + "'");
    b.letters.push_back(v);
  }
  if (b.strands < 0) {
    int m = 0;
    for (int l : b.letters) m = std::max(m, std::abs(l));
    b.strands = m + 1;
  }
  validate_braid(b);
  return b;
}

std::string serialize_braid(const BraidWord& b) {
  std::ostringstream out;
  out << "strands=" << b.strands << "\n";
  for (std::size_t i = 0; i < b.letters.size(); ++i) out << (i ? "," : "") << b.letters[i];
  return out.str();
}

BraidWord random_knot_braid(std::uint64_t seed, int min_strands, int max_strands, int max_letters) {
  Rng rng(seed);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    BraidWord b;
    b.strands = min_strands + rng.index(max_strands - min_strands + 1);
    if (b.strands - 1 > max_letters) continue;
    int len = (b.strands - 1) + rng.index(max_letters - (b.strands - 1) + 1);
    for (int i = 0; i < len; ++i) {
      int g = 1 + rng.index(b.strands - 1);
      b.letters.push_back(rng.below(2) ? g : -g);
    }
    if (closure_is_knot(b)) return b;
  }
  throw BraidError("could not draw a knotted braid");
}

}  // namespace unknot

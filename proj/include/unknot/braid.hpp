#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "unknot/diagram.hpp"

namespace unknot {

constexpr int kMaxBraidStrands = 8;

/// Letters are ±i for σ_i^{±1}, 1 ≤ i < strands.
struct BraidWord {
  int strands = 2;
  std::vector<int> letters;
  bool operator==(const BraidWord&) const = default;
};

class BraidError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

void validate_braid(const BraidWord& b);
int braid_writhe(const BraidWord& b);
/// Position permutation: strand starting at position p ends at perm[p].
std::vector<int> braid_permutation(const BraidWord& b);
bool closure_is_knot(const BraidWord& b);

/// Diagram of the closure; crossing k comes from letter k.
Diagram closure(const BraidWord& b);

struct BennequinBounds {
  int lower = 0;  // |w| - n + 1
  int upper = 0;  // c + 1 - n, c = crossings of the closure diagram
  int closure_crossings = 0;
  int simplified_crossings = 0;
};
/// Bounds on 2u of the closure diagram.
BennequinBounds slice_bennequin(const BraidWord& b);

/// b1 on k1 strands, then σ_{k1}, then b2 shifted by k1.
BraidWord braid_connected_sum(const BraidWord& b1, const BraidWord& b2);

/// Identity word pattern: letters are offsets from a base generator index.
struct IdentityWord {
  std::string name;
  std::vector<int> pattern;  // ±(1 + offset)
  int span() const;          // strands touched beyond the base index
};

const std::vector<IdentityWord>& default_identity_library();
/// Throws BraidError unless every word is a verified identity.
void verify_identity_library(const std::vector<IdentityWord>& library);
/// Library words from text: one comma-separated pattern per line, optional `name:` prefix.
std::vector<IdentityWord> parse_identity_library(const std::string& text);

/// Inserts `count` library words at random positions. When boundary > 0 every inserted
/// word touches both strands boundary and boundary + 1.
BraidWord insert_identity_words(const BraidWord& b, std::uint64_t seed, int count,
                                const std::vector<IdentityWord>& library = default_identity_library(),
                                int boundary = 0);

BraidWord parse_braid(const std::string& text);
std::string serialize_braid(const BraidWord& b);

/// Random braid whose closure is a knot.
BraidWord random_knot_braid(std::uint64_t seed, int min_strands, int max_strands, int max_letters);

}  // namespace unknot

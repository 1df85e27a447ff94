#include "unknot/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <queue>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "unknot/planar.hpp"

namespace unknot {

using planar::crossing_of;
using planar::Graph;
using planar::position_of;
using planar::slot_of;

int writhe(const Diagram& d) {
  int w = 0;
  for (int s : crossing_signs(d)) w += s;
  return w;
}

bool is_alternating(const Diagram& d) {
  if (d.empty()) return true;
  auto t = planar::traverse(Graph::from_diagram(d));
  for (int k = 0; k < t.components(); ++k) {
    int begin = t.component_starts[k];
    int end = k + 1 < t.components() ? t.component_starts[k + 1] : static_cast<int>(t.entries.size());
    for (int i = begin; i < end; ++i) {
      int next = i + 1 == end ? begin : i + 1;
      if (planar::is_over(t.entries[i]) == planar::is_over(t.entries[next])) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Kauffman bracket: sweep crossings, keeping for every boundary matching the
// polynomial accumulated so far.

namespace {

using Coeff = __int128;

struct DensePoly {
  int low = 0;
  std::vector<Coeff> c;

  void add(const DensePoly& o) {
    if (o.c.empty()) return;
    if (c.empty()) {
      *this = o;
      return;
    }
    int new_low = std::min(low, o.low);
    int new_high = std::max(low + static_cast<int>(c.size()), o.low + static_cast<int>(o.c.size()));
    std::vector<Coeff> out(new_high - new_low, 0);
    for (std::size_t i = 0; i < c.size(); ++i) out[low - new_low + i] = c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) {
      Coeff& dst = out[o.low - new_low + i];
      if (__builtin_add_overflow(dst, o.c[i], &dst)) throw BracketCapError("bracket coefficient overflow");
    }
    low = new_low;
    c = std::move(out);
  }

  DensePoly shifted(int k) const {
    DensePoly p = *this;
    p.low += k;
    return p;
  }

  // Multiplies by the loop value -A^2 - A^-2.
  DensePoly times_loop() const {
    DensePoly p;
    p.low = low - 2;
    p.c.assign(c.size() + 4, 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (__builtin_sub_overflow(p.c[i], c[i], &p.c[i]) ||
          __builtin_sub_overflow(p.c[i + 4], c[i], &p.c[i + 4]))
        throw BracketCapError("bracket coefficient overflow");
    }
    return p;
  }
};

BigInt to_big(Coeff v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  BigInt r = static_cast<std::uint64_t>(u >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(u);
  return neg ? BigInt(-r) : r;
}

std::vector<int> sweep_order(const Graph& g) {
  const int n = g.size();
  std::vector<char> done(n, 0);
  std::vector<int> order;
  for (int step = 0; step < n; ++step) {
    int best = -1, best_shared = -1;
    for (int c = 0; c < n; ++c) {
      if (done[c]) continue;
      int shared = 0;
      for (int p = 0; p < 4; ++p) {
        int m = g.mate[slot_of(c, p)];
        if (done[crossing_of(m)]) ++shared;
      }
      if (shared > best_shared) {
        best = c;
        best_shared = shared;
      }
    }
    done[best] = 1;
    order.push_back(best);
  }
  return order;
}

}  // namespace

LaurentPolynomial kauffman_bracket(const Diagram& d, int cap) {
  if (d.size() > cap)
    throw BracketCapError("bracket cap of " + std::to_string(cap) + " crossings exceeded");
  if (d.empty()) return LaurentPolynomial::constant(1, 'A');
  Graph g = Graph::from_diagram(d);
  const int n = g.size();
  auto order = sweep_order(g);
  std::vector<char> done(n, 0);

  using Matching = std::vector<std::uint8_t>;
  std::vector<int> boundary;  // open slots of processed crossings
  std::map<Matching, DensePoly> states;
  states[Matching{}] = DensePoly{0, {1}};

  for (int c : order) {
    // Nodes: old boundary positions, then the four slots of c.
    const int b = static_cast<int>(boundary.size());
    std::vector<int> glue(b + 4, -1);
    auto node_of_slot = [&](int s) -> int {
      if (crossing_of(s) == c) return b + position_of(s);
      for (int i = 0; i < b; ++i)
        if (boundary[i] == s) return i;
      return -1;
    };
    for (int p = 0; p < 4; ++p) {
      int s = slot_of(c, p);
      int m = g.mate[s];
      if (crossing_of(m) == c || done[crossing_of(m)]) {
        int other = node_of_slot(m);
        glue[b + p] = other;
        glue[other] = b + p;
      }
    }
    std::vector<int> open;
    for (int i = 0; i < b + 4; ++i)
      if (glue[i] < 0) open.push_back(i);
    std::vector<int> open_pos(b + 4, -1);
    for (int k = 0; k < static_cast<int>(open.size()); ++k) open_pos[open[k]] = k;
    std::vector<int> next_boundary;
    for (int i : open) next_boundary.push_back(i < b ? boundary[i] : slot_of(c, i - b));
    if (next_boundary.size() > 250) throw BracketCapError("bracket sweep too wide");

    std::map<Matching, DensePoly> next_states;
    std::vector<int> inner(b + 4);
    std::vector<char> seen(b + 4);
    for (const auto& [match, poly] : states) {
      for (int smoothing = 0; smoothing < 2; ++smoothing) {
        for (int i = 0; i < b; ++i) inner[i] = match[i];
        if (smoothing == 0) {  // A: (0,1)(2,3)
          inner[b + 0] = b + 1, inner[b + 1] = b + 0, inner[b + 2] = b + 3, inner[b + 3] = b + 2;
        } else {  // B: (0,3)(1,2)
          inner[b + 0] = b + 3, inner[b + 3] = b + 0, inner[b + 1] = b + 2, inner[b + 2] = b + 1;
        }
        std::fill(seen.begin(), seen.end(), 0);
        Matching out(open.size());
        for (int x : open) {
          if (seen[x]) continue;
          seen[x] = 1;
          int y = inner[x];
          seen[y] = 1;
          while (glue[y] >= 0) {
            int z = glue[y];
            seen[z] = 1;
            y = inner[z];
            seen[y] = 1;
          }
          out[open_pos[x]] = static_cast<std::uint8_t>(open_pos[y]);
          out[open_pos[y]] = static_cast<std::uint8_t>(open_pos[x]);
        }
        int loops = 0;
        for (int x = 0; x < b + 4; ++x) {
          if (seen[x]) continue;
          ++loops;
          int y = x;
          do {
            seen[y] = 1;
            int z = inner[y];
            seen[z] = 1;
            y = glue[z];
          } while (y != x);
        }
        DensePoly term = poly.shifted(smoothing == 0 ? 1 : -1);
        for (int l = 0; l < loops; ++l) term = term.times_loop();
        next_states[out].add(term);
      }
    }
    states = std::move(next_states);
    boundary = std::move(next_boundary);
    done[c] = 1;
  }

  LaurentPolynomial sum('A');
  for (const auto& [match, poly] : states)
    for (std::size_t i = 0; i < poly.c.size(); ++i)
      if (poly.c[i] != 0) sum.add_term(poly.low + static_cast<int>(i), to_big(poly.c[i]));
  LaurentPolynomial loop('A');
  loop.add_term(2, -1);
  loop.add_term(-2, -1);
  return sum.divided_by(loop);
}

LaurentPolynomial jones_from_bracket(const LaurentPolynomial& bracket, int w) {
  // (-A^3)^(-w) <D>, then A = t^(-1/4).
  LaurentPolynomial normalized = bracket.shifted(-3 * w);
  if (w % 2 != 0) normalized = -normalized;
  LaurentPolynomial v('t', 4);
  for (const auto& [e, c] : normalized.terms()) v.add_term(-e, c);
  return v.reduced();
}

LaurentPolynomial jones(const Diagram& d, int cap) {
  require_knot(d);
  return jones_from_bracket(kauffman_bracket(d, cap), writhe(d));
}

// ---------------------------------------------------------------------------
// Alexander polynomial through a Fox-calculus matrix evaluated modulo primes.

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 pow_mod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  for (a %= p; e; e >>= 1, a = mul_mod(a, a, p))
    if (e & 1) r = mul_mod(r, a, p);
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL})
    if (n % q == 0) return n == q;
  u64 dd = n - 1;
  int s = 0;
  while ((dd & 1) == 0) dd >>= 1, ++s;
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, dd, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s && composite; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

const std::vector<u64>& large_primes(std::size_t count) {
  static std::vector<u64> primes;
  static std::mutex lock;
  std::lock_guard guard(lock);
  u64 candidate = primes.empty() ? (1ULL << 62) - 1 : primes.back() - 2;
  while (primes.size() < count) {
    if (is_prime(candidate)) primes.push_back(candidate);
    candidate -= 2;
  }
  return primes;
}

u64 det_mod(std::vector<std::vector<u64>> m, u64 p) {
  const int n = static_cast<int>(m.size());
  u64 det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = det == 0 ? 0 : p - det;
    }
    det = mul_mod(det, m[col][col], p);
    u64 inv = pow_mod(m[col][col], p - 2, p);
    for (int r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      u64 f = mul_mod(m[r][col], inv, p);
      for (int k = col; k < n; ++k) m[r][k] = (m[r][k] + p - mul_mod(f, m[col][k], p)) % p;
    }
  }
  return det;
}

// Coefficients (ascending) of the unique polynomial of degree < xs.size() through the points.
std::vector<u64> interpolate_mod(const std::vector<u64>& xs, const std::vector<u64>& ys, u64 p) {
  const std::size_t n = xs.size();
  std::vector<u64> result(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<u64> basis{1};
    u64 denom = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      std::vector<u64> next(basis.size() + 1, 0);
      u64 neg = (p - xs[j] % p) % p;
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k] = (next[k] + mul_mod(basis[k], neg, p)) % p;
        next[k + 1] = (next[k + 1] + basis[k]) % p;
      }
      basis = std::move(next);
      denom = mul_mod(denom, (xs[i] + p - xs[j]) % p, p);
    }
    u64 scale = mul_mod(ys[i], pow_mod(denom, p - 2, p), p);
    for (std::size_t k = 0; k < n; ++k) result[k] = (result[k] + mul_mod(basis[k], scale, p)) % p;
  }
  return result;
}

}  // namespace

LaurentPolynomial alexander(const Diagram& d) {
  require_knot(d);
  const int n = d.size();
  if (n <= 1) return LaurentPolynomial::constant(1, 't');
  Graph g = Graph::from_diagram(d);
  auto t = planar::traverse(g);
  const int total = static_cast<int>(t.entries.size());

  std::vector<int> over_arc(n), in_arc(n), out_arc(n);
  int first_under = 0;
  while (planar::is_over(t.entries[first_under])) ++first_under;
  int arc = 0;
  for (int k = 1; k <= total; ++k) {
    int e = t.entries[(first_under + k) % total];
    int c = crossing_of(e);
    if (planar::is_over(e)) {
      over_arc[c] = arc;
    } else {
      in_arc[c] = arc;
      arc = k == total ? 0 : arc + 1;
      out_arc[c] = arc;
    }
  }

  // Row per crossing, entries a0 + a1 t.
  std::vector<std::vector<std::array<int, 2>>> m(n, std::vector<std::array<int, 2>>(n, {0, 0}));
  for (int c = 0; c < n; ++c) {
    int sign = planar::sign_of(t.under_entry[c], t.over_entry[c]);
    m[c][over_arc[c]][0] += 1;
    m[c][over_arc[c]][1] -= 1;
    if (sign > 0) {
      m[c][in_arc[c]][1] += 1;
      m[c][out_arc[c]][0] -= 1;
    } else {
      m[c][in_arc[c]][0] -= 1;
      m[c][out_arc[c]][1] += 1;
    }
  }
  const int size = n - 1;
  BigInt bound = BigInt(1) << (2 * size + 1);

  std::vector<u64> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = static_cast<u64>(i + 1);
  std::vector<BigInt> coeffs(n, 0);
  BigInt modulus = 1;
  for (std::size_t pi = 0; modulus <= bound; ++pi) {
    u64 p = large_primes(pi + 1)[pi];
    std::vector<u64> ys(n);
    for (int i = 0; i < n; ++i) {
      std::vector<std::vector<u64>> e(size, std::vector<u64>(size));
      for (int r = 0; r < size; ++r)
        for (int c = 0; c < size; ++c) {
          long long v = m[r][c][0] + static_cast<long long>(m[r][c][1]) * static_cast<long long>(xs[i]);
          e[r][c] = static_cast<u64>(((v % static_cast<long long>(p)) + static_cast<long long>(p)) %
                                     static_cast<long long>(p));
        }
      ys[i] = det_mod(std::move(e), p);
    }
    auto residues = interpolate_mod(xs, ys, p);
    BigInt bp = p;
    BigInt inv = BigInt(pow_mod(static_cast<u64>(modulus % bp), p - 2, p));
    for (int k = 0; k < n; ++k) {
      BigInt cur = coeffs[k] % bp;
      if (cur < 0) cur += bp;
      BigInt delta = (BigInt(residues[k]) - cur) % bp;
      if (delta < 0) delta += bp;
      delta = delta * inv % bp;
      coeffs[k] += modulus * delta;
    }
    modulus *= bp;
  }
  LaurentPolynomial poly('t');
  for (int k = 0; k < n; ++k) {
    BigInt v = coeffs[k] % modulus;
    if (v < 0) v += modulus;
    if (v > modulus / 2) v -= modulus;
    poly.add_term(k, v);
  }
  if (poly.is_zero()) throw ValidationError("degenerate Alexander presentation");
  int span = poly.max_exponent() - poly.min_exponent();
  if (span % 2 != 0) throw ValidationError("Alexander polynomial is not symmetric");
  poly = poly.shifted(-poly.min_exponent() - span / 2);
  BigInt at_one = poly.evaluate_at_one();
  if (at_one == -1) poly = -poly;
  else if (at_one != 1) throw ValidationError("Alexander polynomial does not satisfy Δ(1) = ±1");
  return poly;
}

// ---------------------------------------------------------------------------
// Goeritz matrix and the Gordon–Litherland correction.

GoeritzData goeritz(const Diagram& d) {
  GoeritzData out;
  if (d.empty()) return out;
  require_knot(d);
  Graph g = Graph::from_diagram(d);
  auto fs = planar::faces(g);
  auto fid = planar::face_index(g, fs);
  const int nf = static_cast<int>(fs.size());

  std::vector<int> color(nf, -1);
  std::queue<int> q;
  color[0] = 0;
  q.push(0);
  while (!q.empty()) {
    int f = q.front();
    q.pop();
    for (int s : fs[f]) {
      int other = fid[g.mate[s]];
      if (color[other] < 0) {
        color[other] = 1 - color[f];
        q.push(other);
      } else if (color[other] == color[f]) {
        throw std::logic_error("diagram faces are not two-colorable");
      }
    }
  }

  // White regions carry the matrix; the shaded ones form the spanning surface.
  std::vector<int> white_index(nf, -1);
  int nw = 0;
  for (int f = 0; f < nf; ++f)
    if (color[f] == 0) white_index[f] = nw++;

  auto t = planar::traverse(g);
  std::vector<char> incoming(4 * g.size(), 0);
  for (int c = 0; c < g.size(); ++c) incoming[t.under_entry[c]] = incoming[t.over_entry[c]] = 1;

  std::vector<std::vector<long long>> full(nw, std::vector<long long>(nw, 0));
  for (int c = 0; c < g.size(); ++c) {
    // Corner k lies between positions k and k+1 and belongs to the face of slot (c, k).
    int corner_face[4];
    for (int k = 0; k < 4; ++k) corner_face[k] = fid[slot_of(c, k)];
    bool white_even = color[corner_face[0]] == 0;
    int eta = white_even ? 1 : -1;
    int wa = white_even ? corner_face[0] : corner_face[1];
    int wb = white_even ? corner_face[2] : corner_face[3];
    if (wa != wb) {
      int i = white_index[wa], j = white_index[wb];
      full[i][j] -= eta;
      full[j][i] -= eta;
      full[i][i] += eta;
      full[j][j] += eta;
    }
    int shaded = white_even ? 1 : 0;
    bool a_in = incoming[slot_of(c, shaded)], b_in = incoming[slot_of(c, shaded + 1)];
    if (a_in == b_in) out.correction += eta;
  }
  out.matrix.assign(std::max(nw - 1, 0), std::vector<long long>(std::max(nw - 1, 0), 0));
  for (int i = 1; i < nw; ++i)
    for (int j = 1; j < nw; ++j) out.matrix[i - 1][j - 1] = full[i][j];
  return out;
}

BigInt determinant(const Diagram& d) {
  auto gd = goeritz(d);
  const int n = static_cast<int>(gd.matrix.size());
  if (n == 0) return 1;
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = gd.matrix[i][j];
  // Bareiss fraction-free elimination.
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[r], m[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  BigInt det = m[n - 1][n - 1] * sign;
  return det < 0 ? BigInt(-det) : det;
}

namespace {

using Rational = boost::multiprecision::cpp_rational;

int symmetric_signature(const std::vector<std::vector<long long>>& input) {
  const int n = static_cast<int>(input.size());
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = input[i][j];
  int sig = 0;
  for (int k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      int swap_with = -1;
      for (int j = k + 1; j < n; ++j)
        if (m[j][j] != 0) {
          swap_with = j;
          break;
        }
      if (swap_with >= 0) {
        std::swap(m[k], m[swap_with]);
        for (auto& row : m) std::swap(row[k], row[swap_with]);
      } else {
        int partner = -1;
        for (int j = k + 1; j < n; ++j)
          if (m[k][j] != 0) {
            partner = j;
            break;
          }
        if (partner < 0) continue;  // zero row: null direction
        // Replace basis vector e_k by e_k + e_partner; the new pivot is 2 m[k][partner].
        for (int j = 0; j < n; ++j) m[k][j] += m[partner][j];
        for (int i = 0; i < n; ++i) m[i][k] += m[i][partner];
      }
    }
    const Rational pivot = m[k][k];
    sig += pivot > 0 ? 1 : -1;
    for (int i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      Rational f = m[i][k] / pivot;
      for (int j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
    for (int j = k + 1; j < n; ++j) m[k][j] = 0;
    for (int i = k + 1; i < n; ++i) m[i][k] = 0;
  }
  return sig;
}

}  // namespace

int signature(const Diagram& d) {
  auto gd = goeritz(d);
  return symmetric_signature(gd.matrix) - gd.correction;
}

// ---------------------------------------------------------------------------
// Features and fingerprints.

FeatureConfig::FeatureConfig() {
  const double tau = 2 * std::numbers::pi;
  points = {{0.99, 0.0}, {1.01, 0.0}, std::polar(1.0, tau / 5), std::polar(1.0, tau / 3)};
}

namespace {

constexpr const char* kScalarFeatures[] = {
    "writhe",          "crossings",          "alternating",        "determinant",
    "signature",       "alexander_abs_sum",  "alexander_min_degree", "alexander_max_degree",
    "jones_min_degree", "jones_max_degree",
};

std::string point_label(std::complex<double> z) {
  char buf[64];
  if (z.imag() == 0.0) std::snprintf(buf, sizeof buf, "%g", z.real());
  else std::snprintf(buf, sizeof buf, "%g%+gi", z.real(), z.imag());
  return buf;
}

double clip(double v, double range) {
  if (std::isnan(v)) return 0.0;
  return std::clamp(v, -range, range);
}

}  // namespace

std::vector<std::string> feature_names(const FeatureConfig& config) {
  std::vector<std::string> names(std::begin(kScalarFeatures), std::end(kScalarFeatures));
  for (const char* poly : {"V", "Delta"})
    for (int k = 0; k < 4; ++k)
      for (auto z : config.points) {
        std::string base = std::string(poly) + std::string(k, '\'') + "(" + point_label(z) + ")";
        names.push_back(base + ".re");
        names.push_back(base + ".im");
      }
  return names;
}

std::string feature_schema_json(const FeatureConfig& config) {
  nlohmann::json j;
  j["version"] = 1;
  j["clip"] = config.clip;
  j["features"] = feature_names(config);
  return j.dump();
}

FeatureVector feature_vector(const Diagram& d, const FeatureConfig& config) {
  const auto names = feature_names(config);
  FeatureVector fv;
  fv.values.assign(names.size(), 0.0);
  fv.failed.assign(names.size(), false);
  auto set = [&](std::size_t i, double v) { fv.values[i] = clip(v, config.clip); };
  auto fail = [&](std::size_t i) {
    fv.values[i] = 0.0;
    fv.failed[i] = true;
  };

  set(1, d.size());
  const std::size_t np = config.points.size();
  const std::size_t jones_block = std::size(kScalarFeatures);
  const std::size_t alex_block = jones_block + 8 * np;

  auto eval_block = [&](std::size_t start, const LaurentPolynomial* p) {
    LaurentPolynomial cur = p ? *p : LaurentPolynomial{};
    for (int k = 0; k < 4; ++k) {
      for (std::size_t i = 0; i < np; ++i) {
        std::size_t idx = start + 2 * (k * np + i);
        if (!p) {
          fail(idx);
          fail(idx + 1);
          continue;
        }
        auto z = cur.evaluate(config.points[i]);
        set(idx, z.real());
        set(idx + 1, z.imag());
      }
      if (p) cur = cur.derivative();
    }
  };

  try {
    set(0, writhe(d));
    set(2, is_alternating(d) ? 1.0 : 0.0);
  } catch (const std::exception&) {
    fail(0);
    fail(2);
  }
  try {
    set(3, static_cast<double>(determinant(d)));
    set(4, signature(d));
  } catch (const std::exception&) {
    fail(3);
    fail(4);
  }
  try {
    auto a = alexander(d);
    set(5, static_cast<double>(a.sum_abs_coefficients()));
    set(6, a.min_exponent());
    set(7, a.max_exponent());
    eval_block(alex_block, &a);
  } catch (const std::exception&) {
    fail(5), fail(6), fail(7);
    eval_block(alex_block, nullptr);
  }
  try {
    auto v = jones(d, config.bracket_cap);
    if (v.denominator() != 1) throw std::domain_error("fractional Jones exponents");
    set(8, v.min_exponent());
    set(9, v.max_exponent());
    eval_block(jones_block, &v);
  } catch (const std::exception&) {
    fail(8), fail(9);
    eval_block(jones_block, nullptr);
  }
  return fv;
}

std::string to_string(FingerprintMode mode) {
  switch (mode) {
    case FingerprintMode::None: return "none";
    case FingerprintMode::Alexander: return "alexander";
    case FingerprintMode::Jones: return "jones";
    case FingerprintMode::Both: return "both";
  }
  return "?";
}

FingerprintMode fingerprint_mode_from_string(const std::string& s) {
  for (auto m : {FingerprintMode::None, FingerprintMode::Alexander, FingerprintMode::Jones,
                 FingerprintMode::Both})
    if (to_string(m) == s) return m;
  throw std::invalid_argument("unknown fingerprint mode '" + s + "'");
}

std::size_t Fingerprint::hash() const {
  return std::hash<std::string>{}(key) ^ (failed ? 0x9e3779b97f4a7c15ULL : 0) ^
         static_cast<std::size_t>(mode);
}

Fingerprint fingerprint(const Diagram& d, FingerprintMode mode, int cap) {
  Fingerprint fp;
  fp.mode = mode;
  try {
    switch (mode) {
      case FingerprintMode::None: break;
      case FingerprintMode::Alexander: fp.key = "A" + alexander(d).to_json(); break;
      case FingerprintMode::Jones: fp.key = "V" + jones(d, cap).to_json(); break;
      case FingerprintMode::Both:
        fp.key = "A" + alexander(d).to_json() + "V" + jones(d, cap).to_json();
        break;
    }
  } catch (const std::exception& e) {
    fp.failed = true;
    fp.key = "failed";
  }
  return fp;
}

}  // namespace unknot

#pragma once

// Reference computations used only by the tests. They share no code with the
// library beyond the Diagram/BraidWord data types.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "unknot/braid.hpp"
#include "unknot/diagram.hpp"

namespace oracle {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;
using Poly = std::map<int, cpp_int>;  // exponent -> coefficient

inline void add(Poly& p, int e, const cpp_int& c) {
  p[e] += c;
  if (p[e] == 0) p.erase(e);
}

inline Poly mul(const Poly& a, const Poly& b) {
  Poly r;
  for (auto& [ea, ca] : a)
    for (auto& [eb, cb] : b) add(r, ea + eb, ca * cb);
  return r;
}

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

inline std::vector<int> labels_of(const unknot::Diagram& d) {
  std::vector<int> labels;
  for (auto& c : d.crossings) labels.insert(labels.end(), c.begin(), c.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

/// Number of loops after smoothing every crossing; bit i of `state` set means B at crossing i.
inline int loops(const unknot::Diagram& d, unsigned long long state) {
  auto labels = labels_of(d);
  auto id = [&](int l) { return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin()); };
  Dsu u(static_cast<int>(labels.size()));
  for (int i = 0; i < d.size(); ++i) {
    const auto& c = d.crossings[i];
    if ((state >> i) & 1) {
      u.unite(id(c[0]), id(c[3]));
      u.unite(id(c[1]), id(c[2]));
    } else {
      u.unite(id(c[0]), id(c[1]));
      u.unite(id(c[2]), id(c[3]));
    }
  }
  int n = 0;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) n += u.find(i) == i;
  return n;
}

/// Kauffman bracket in A by summing over all 2^n states, normalised so the unknot is 1.
inline Poly state_sum_bracket(const unknot::Diagram& d) {
  if (d.empty()) return {{0, 1}};
  const Poly delta{{2, -1}, {-2, -1}};
  std::vector<Poly> delta_pow{{{0, 1}}};
  Poly total;
  const int n = d.size();
  for (unsigned long long s = 0; s < (1ULL << n); ++s) {
    int b = __builtin_popcountll(s);
    int l = loops(d, s);
    while (static_cast<int>(delta_pow.size()) < l) delta_pow.push_back(mul(delta_pow.back(), delta));
    for (auto& [e, c] : delta_pow[l - 1]) add(total, e + (n - b) - b, c);
  }
  return total;
}

/// Jones polynomial in t with exponents scaled by 4, from a bracket and a writhe.
inline Poly jones_from(const Poly& bracket, int writhe) {
  Poly r;
  cpp_int sign = (writhe % 2 == 0) ? 1 : -1;
  for (auto& [e, c] : bracket) add(r, -(e - 3 * writhe), c * sign);  // A = t^(-1/4)
  return r;
}

inline cpp_int det_int(std::vector<std::vector<cpp_rational>> m) {
  const int n = static_cast<int>(m.size());
  cpp_rational det = 1;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int r = col + 1; r < n; ++r) {
      cpp_rational f = m[r][col] / m[col][col];
      for (int k = col; k < n; ++k) m[r][k] -= f * m[col][k];
    }
  }
  return boost::multiprecision::numerator(det);
}

inline cpp_rational det_rational(std::vector<std::vector<cpp_rational>> m) {
  const int n = static_cast<int>(m.size());
  cpp_rational det = 1;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int r = col + 1; r < n; ++r) {
      cpp_rational f = m[r][col] / m[col][col];
      for (int k = col; k < n; ++k) m[r][k] -= f * m[col][k];
    }
  }
  return det;
}

/// Knot determinant from the Fox 3-colouring matrix on arcs (any first minor).
inline cpp_int coloring_determinant(const unknot::Diagram& d) {
  if (d.empty()) return 1;
  auto labels = labels_of(d);
  auto id = [&](int l) { return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin()); };
  // Arcs: edge labels glued through over-strands (slots 1 and 3 are the same arc).
  Dsu arcs(static_cast<int>(labels.size()));
  for (auto& c : d.crossings) arcs.unite(id(c[1]), id(c[3]));
  std::map<int, int> arc_index;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i)
    if (!arc_index.count(arcs.find(i))) {
      int k = static_cast<int>(arc_index.size());
      arc_index[arcs.find(i)] = k;
    }
  const int n = d.size();
  std::vector<std::vector<cpp_rational>> m(n, std::vector<cpp_rational>(arc_index.size(), 0));
  for (int i = 0; i < n; ++i) {
    const auto& c = d.crossings[i];
    m[i][arc_index[arcs.find(id(c[1]))]] += 2;
    m[i][arc_index[arcs.find(id(c[0]))]] -= 1;
    m[i][arc_index[arcs.find(id(c[2]))]] -= 1;
  }
  std::vector<std::vector<cpp_rational>> minor;
  for (int i = 1; i < n; ++i) minor.emplace_back(m[i].begin() + 1, m[i].end());
  cpp_int v = det_int(minor);
  return v < 0 ? cpp_int(-v) : v;
}

/// det(I - reduced Burau(b)) at t = x, equal to (1 + x + ... + x^(n-1)) Δ(x) up to ±x^k.
inline cpp_rational burau_value(const unknot::BraidWord& b, const cpp_rational& x) {
  const int m = b.strands - 1;
  if (m == 0) return 0;
  auto identity = [&] {
    std::vector<std::vector<cpp_rational>> id(m, std::vector<cpp_rational>(m, 0));
    for (int i = 0; i < m; ++i) id[i][i] = 1;
    return id;
  };
  auto matmul = [&](const auto& p, const auto& q) {
    std::vector<std::vector<cpp_rational>> r(m, std::vector<cpp_rational>(m, 0));
    for (int i = 0; i < m; ++i)
      for (int k = 0; k < m; ++k)
        if (p[i][k] != 0)
          for (int j = 0; j < m; ++j) r[i][j] += p[i][k] * q[k][j];
    return r;
  };
  auto generator = [&](int g, bool inverse) {
    auto s = identity();
    int i = g - 1;
    cpp_rational t = inverse ? cpp_rational(1) / x : x;
    // σ_i acts on row i: e_{i-1} coefficient t, diagonal -t, e_{i+1} coefficient 1.
    // The inverse uses t^-1 with the off-diagonal entries swapped and scaled.
    if (!inverse) {
      s[i][i] = -t;
      if (i > 0) s[i][i - 1] = t;
      if (i + 1 < m) s[i][i + 1] = 1;
    } else {
      s[i][i] = -t;
      if (i > 0) s[i][i - 1] = 1;
      if (i + 1 < m) s[i][i + 1] = t;
    }
    return s;
  };
  auto acc = identity();
  for (int l : b.letters) acc = matmul(acc, generator(std::abs(l), l < 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) acc[i][j] = (i == j ? 1 : 0) - acc[i][j];
  return det_rational(acc);
}

}  // namespace oracle

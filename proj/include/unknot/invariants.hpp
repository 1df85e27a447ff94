#pragma once

#include <complex>
#include <string>
#include <vector>

#include "unknot/diagram.hpp"
#include "unknot/polynomial.hpp"

namespace unknot {

class BracketCapError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

int writhe(const Diagram& d);
/// True when the traversal alternates over and under (vacuously for n = 0).
bool is_alternating(const Diagram& d);

constexpr int kDefaultBracketCap = 64;

/// Kauffman bracket in A, normalized so the crossingless circle is 1.
LaurentPolynomial kauffman_bracket(const Diagram& d, int cap = kDefaultBracketCap);
/// Jones polynomial in t, from the writhe-normalized bracket with A = t^(-1/4).
LaurentPolynomial jones(const Diagram& d, int cap = kDefaultBracketCap);
/// Jones polynomial from an already computed bracket.
LaurentPolynomial jones_from_bracket(const LaurentPolynomial& bracket, int writhe);

/// Alexander polynomial, normalized with Δ(t) = Δ(1/t) and Δ(1) = 1.
LaurentPolynomial alexander(const Diagram& d);

/// Determinant from the Goeritz matrix.
BigInt determinant(const Diagram& d);
/// Signature via the Gordon–Litherland form; the right-handed trefoil has σ = -2.
int signature(const Diagram& d);

struct GoeritzData {
  std::vector<std::vector<long long>> matrix;  // reduced Goeritz matrix
  int correction = 0;                           // Gordon–Litherland term μ
};
GoeritzData goeritz(const Diagram& d);

struct FeatureConfig {
  std::vector<std::complex<double>> points;  // evaluation points for V and Δ
  double clip = 1e6;
  int bracket_cap = kDefaultBracketCap;
  FeatureConfig();
};

struct FeatureVector {
  std::vector<double> values;
  std::vector<bool> failed;
};

/// Feature names in output order; the length depends only on the number of points.
std::vector<std::string> feature_names(const FeatureConfig& config = {});
/// Versioned JSON descriptor of the feature layout.
std::string feature_schema_json(const FeatureConfig& config = {});
FeatureVector feature_vector(const Diagram& d, const FeatureConfig& config = {});

enum class FingerprintMode { None, Alexander, Jones, Both };
std::string to_string(FingerprintMode mode);
FingerprintMode fingerprint_mode_from_string(const std::string& s);

/// Exact canonical encoding of the chosen polynomial(s). A failed computation
/// yields a sentinel that differs from every successful fingerprint.
struct Fingerprint {
  FingerprintMode mode = FingerprintMode::None;
  bool failed = false;
  std::string key;

  bool operator==(const Fingerprint&) const = default;
  auto operator<=>(const Fingerprint&) const = default;
  std::size_t hash() const;
};

Fingerprint fingerprint(const Diagram& d, FingerprintMode mode, int cap = kDefaultBracketCap);

}  // namespace unknot

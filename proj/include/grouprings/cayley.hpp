#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace gring {

struct group_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Construction provenance, kept so that downstream deciders can recognize
/// parametric families (e.g. the C_{p^m} x| C_{p^n} series) without an
/// isomorphism search.
struct FamilyTag {
  std::string name;              // "cyclic", "G", "metacyclic", ...
  std::vector<long long> params; // family parameters, e.g. {p, m, n}
};

/// A finite group given by its full multiplication table.
/// Element 0 is always the identity. Immutable after construction.
class CayleyGroup {
public:
  int order = 0;
  std::vector<int> table;   // row-major: table[i*order+j] = i*j
  std::vector<int> inverse; // inverse[i]
  std::vector<std::pair<std::string, int>> generators;
  std::vector<std::string> element_names;
  FamilyTag tag;

  CayleyGroup() = default;

  int mul(int i, int j) const { return table[size_t(i) * order + j]; }
  int inv(int i) const { return inverse[i]; }
  int conj(int x, int g) const { return mul(mul(inverse[g], x), g); }       // x^g
  int comm(int x, int y) const { return mul(inverse[mul(y, x)], mul(x, y)); } // [x,y] = x^-1 y^-1 x y

  int pow(int g, long long e) const {
    int r = 0, b = g;
    long long n = e;
    if (n < 0) { b = inverse[g]; n = -n; }
    while (n) {
      if (n & 1) r = mul(r, b);
      b = mul(b, b);
      n >>= 1;
    }
    return r;
  }

  int element_order(int g) const {
    int k = 1, x = g;
    while (x != 0) { x = mul(x, g); ++k; }
    return k;
  }

  int generator(const std::string& name) const {
    for (auto& [n, i] : generators)
      if (n == name) return i;
    throw group_error("no generator named '" + name + "'");
  }

  const std::string& name_of(int i) const { return element_names[i]; }

  /// Exhaustive structural check: identity row/column, inverses,
  /// Latin-square property, and full associativity. Called once on every
  /// construction path; failure text names the violating entry.
  void validate() const {
    const int n = order;
    if (n <= 0 || (int)table.size() != n * n || (int)inverse.size() != n)
      throw group_error("malformed Cayley data");
    for (int i = 0; i < n; ++i) {
      if (mul(0, i) != i || mul(i, 0) != i)
        throw group_error("identity law fails at element " + std::to_string(i));
      if (mul(i, inverse[i]) != 0 || mul(inverse[i], i) != 0)
        throw group_error("inverse law fails at element " + std::to_string(i));
    }
    std::vector<char> seen(n);
    for (int i = 0; i < n; ++i) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int j = 0; j < n; ++j) {
        int v = mul(i, j);
        if (v < 0 || v >= n || seen[v])
          throw group_error("row " + std::to_string(i) + " is not a permutation");
        seen[v] = 1;
      }
      std::fill(seen.begin(), seen.end(), 0);
      for (int j = 0; j < n; ++j) {
        int v = mul(j, i);
        if (seen[v])
          throw group_error("column " + std::to_string(i) + " is not a permutation");
        seen[v] = 1;
      }
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const int ij = mul(i, j);
        for (int k = 0; k < n; ++k)
          if (mul(ij, k) != mul(i, mul(j, k)))
            throw group_error("associativity fails at triple (" + std::to_string(i) +
                              "," + std::to_string(j) + "," + std::to_string(k) + ")");
      }
  }

  void default_names() {
    element_names.resize(order);
    element_names[0] = "1";
    for (int i = 1; i < order; ++i) element_names[i] = "g" + std::to_string(i);
  }

  bool is_abelian() const {
    for (int i = 0; i < order; ++i)
      for (int j = i + 1; j < order; ++j)
        if (mul(i, j) != mul(j, i)) return false;
    return true;
  }
};

using GroupPtr = std::shared_ptr<const CayleyGroup>;

/// Canonical byte serialization of the table; the group fingerprint is a
/// 64-bit FNV-1a hash of these bytes.
inline std::string cayley_bytes(const CayleyGroup& g) {
  std::string out;
  out.reserve(size_t(g.order) * g.order * 4 + 8);
  auto put32 = [&](uint32_t v) {
    for (int k = 0; k < 4; ++k) out.push_back(char((v >> (8 * k)) & 0xff));
  };
  put32(uint32_t(g.order));
  for (int v : g.table) put32(uint32_t(v));
  return out;
}

inline uint64_t fnv1a64(const std::string& bytes) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline uint64_t fingerprint(const CayleyGroup& g) { return fnv1a64(cayley_bytes(g)); }

} // namespace gring

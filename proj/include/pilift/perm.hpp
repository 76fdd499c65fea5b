#pragma once

// Permutations on {0,...,n-1}, stored as image arrays.  Products compose
// left-to-right: (a*b)(x) = b(a(x)).  Cycle notation in text I/O is 1-based.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "pilift/error.hpp"

namespace pilift {

class Perm {
 public:
  Perm() = default;

  explicit Perm(int degree) : img_(degree) {
    std::iota(img_.begin(), img_.end(), 0);
  }

  explicit Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int x : img_) {
      if (x < 0 || x >= static_cast<int>(img_.size()) || seen[x])
        throw InputError("malformed permutation: image array is not a bijection");
      seen[x] = 1;
    }
  }

  int degree() const { return static_cast<int>(img_.size()); }
  int operator[](int p) const { return img_[p]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  // Apply *this, then rhs.
  Perm operator*(const Perm& rhs) const {
    if (degree() != rhs.degree()) throw PreconditionError("permutation degree mismatch");
    std::vector<int> im(img_.size());
    for (int i = 0; i < degree(); ++i) im[i] = rhs.img_[img_[i]];
    Perm out;
    out.img_ = std::move(im);
    return out;
  }

  Perm inverse() const {
    std::vector<int> im(img_.size());
    for (int i = 0; i < degree(); ++i) im[img_[i]] = i;
    Perm out;
    out.img_ = std::move(im);
    return out;
  }

  // g^-1 * a * g.  Conjugation is a right action: conjugate(conjugate(a,g),h)
  // equals conjugate(a, g*h).
  static Perm conjugate(const Perm& a, const Perm& g) {
    return g.inverse() * a * g;
  }

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return img_ != o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

  int smallest_moved_point() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i) return i;
    return -1;
  }

  long order() const {
    long ord = 1;
    for (auto& c : cycles()) ord = std::lcm(ord, static_cast<long>(c.size()));
    return ord;
  }

  Perm power(long k) const {
    long n = order();
    k %= n;
    if (k < 0) k += n;
    Perm acc(degree()), base = *this;
    while (k > 0) {
      if (k & 1) acc = acc * base;
      base = base * base;
      k >>= 1;
    }
    return acc;
  }

  // +1 for even permutations, -1 for odd.
  int sign() const {
    int s = 1;
    for (auto& c : cycles())
      if (c.size() % 2 == 0) s = -s;
    return s;
  }

  // Nontrivial cycles, each starting at its smallest point, sorted by it.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> cs;
    std::vector<char> seen(img_.size(), 0);
    for (int i = 0; i < degree(); ++i) {
      if (seen[i] || img_[i] == i) continue;
      std::vector<int> c;
      for (int j = i; !seen[j]; j = img_[j]) {
        seen[j] = 1;
        c.push_back(j);
      }
      cs.push_back(std::move(c));
    }
    return cs;
  }

  std::string to_cycle_string() const {
    auto cs = cycles();
    if (cs.empty()) return "()";
    std::ostringstream os;
    for (auto& c : cs) {
      os << '(';
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) os << ',';
        os << c[i] + 1;
      }
      os << ')';
    }
    return os.str();
  }

  // Parses 1-based disjoint-cycle notation, e.g. "(1,2)(3,4)" or "()".
  // Spaces are ignored; cycle entries may also be separated by spaces.
  static Perm from_cycle_string(int degree, const std::string& text) {
    Perm out(degree);
    std::vector<int>& im = out.img_;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    while (i < text.size()) {
      if (text[i] != '(') throw InputError("cycle notation: expected '(' in '" + text + "'");
      ++i;
      std::vector<int> cyc;
      skip_ws();
      while (i < text.size() && text[i] != ')') {
        if (text[i] == ',' || std::isspace(static_cast<unsigned char>(text[i]))) { ++i; continue; }
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
          throw InputError("cycle notation: unexpected character in '" + text + "'");
        int v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
          v = v * 10 + (text[i++] - '0');
        if (v < 1 || v > degree)
          throw InputError("cycle notation: point " + std::to_string(v) + " out of range 1.." +
                           std::to_string(degree));
        cyc.push_back(v - 1);
      }
      if (i >= text.size()) throw InputError("cycle notation: unterminated cycle in '" + text + "'");
      ++i;  // ')'
      for (std::size_t j = 0; j < cyc.size(); ++j) {
        int from = cyc[j], to = cyc[(j + 1) % cyc.size()];
        if (im[from] != from)
          throw InputError("cycle notation: point " + std::to_string(from + 1) + " repeated");
        im[from] = to;
      }
      skip_ws();
    }
    return Perm(std::move(im));  // revalidates
  }

 private:
  std::vector<int> img_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : p.images()) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace pilift

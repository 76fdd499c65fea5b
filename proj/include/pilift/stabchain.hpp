#pragma once

// Stabilizer chains via incremental Schreier-Sims.  Base points are chosen
// deterministically (smallest moved point first), so the chain, the order of
// enumerated elements and every downstream computation are reproducible for
// a fixed generator list.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "pilift/error.hpp"
#include "pilift/perm.hpp"

namespace pilift {

class StabChain {
 public:
  struct Level {
    int base = -1;
    std::vector<Perm> gens;                    // generators fixing all earlier base points
    std::vector<int> orbit;                    // discovery order, orbit[0] == base
    std::vector<std::optional<Perm>> transversal;  // by point; t maps base -> point
  };

  StabChain() : degree_(0), order_(1) {}

  StabChain(int degree, const std::vector<Perm>& gens) : degree_(degree), order_(1) {
    for (const Perm& g : gens) {
      if (g.degree() != degree) throw PreconditionError("generator degree mismatch");
      insert(g);
    }
    recompute_order();
    for (const Perm& g : gens)
      if (!contains(g)) throw TheoremViolation("stabilizer chain failed self-verification");
  }

  int degree() const { return degree_; }
  const mpz_class& order() const { return order_; }
  const std::vector<Level>& levels() const { return levels_; }

  bool contains(const Perm& g) const {
    if (g.degree() != degree_) return false;
    Perm r = g;
    if (!sift(r)) return false;
    return r.is_identity();
  }

  // Sifts r through the chain in place; returns false if it falls out of an
  // orbit (r is then the residue at that point).
  bool sift(Perm& r) const {
    for (const Level& lv : levels_) {
      int x = r[lv.base];
      if (x == lv.base) continue;
      if (!lv.transversal[x]) return false;
      r = r * lv.transversal[x]->inverse();
    }
    return true;
  }

  // Enumerates all elements; callers must have checked the order is sane.
  std::vector<Perm> elements() const {
    if (!order_.fits_ulong_p())
      throw GuardError("element enumeration: order out of range");
    std::vector<Perm> out;
    out.reserve(order_.get_ui());
    Perm id(degree_);
    enumerate(0, id, out);
    return out;
  }

  template <class Rng>
  Perm random_element(Rng& rng) const {
    Perm g(degree_);
    for (const Level& lv : levels_) {
      std::uniform_int_distribution<std::size_t> pick(0, lv.orbit.size() - 1);
      g = g * *lv.transversal[lv.orbit[pick(rng)]];
    }
    return g;
  }

 private:
  void enumerate(std::size_t level, const Perm& prefix, std::vector<Perm>& out) const {
    if (level == levels_.size()) {
      out.push_back(prefix);
      return;
    }
    const Level& lv = levels_[level];
    for (int pt : lv.orbit) enumerate(level + 1, *lv.transversal[pt] * prefix, out);
  }

  void insert(const Perm& g) {
    Perm r = g;
    std::size_t i = 0;
    for (; i < levels_.size(); ++i) {
      const Level& lv = levels_[i];
      int x = r[lv.base];
      if (x == lv.base) continue;
      if (!lv.transversal[x]) break;
      r = r * lv.transversal[x]->inverse();
    }
    if (r.is_identity()) return;
    if (i == levels_.size()) {
      // r fixes every existing base point; open a new level.
      Level lv;
      lv.base = r.smallest_moved_point();
      lv.transversal.assign(degree_, std::nullopt);
      lv.transversal[lv.base] = Perm(degree_);
      lv.orbit = {lv.base};
      levels_.push_back(std::move(lv));
    }
    add_generator(i, r);
  }

  void add_generator(std::size_t level, const Perm& g) {
    Level& lv = levels_[level];
    lv.gens.push_back(g);
    // Re-run the orbit closure with the enlarged generator set and collect
    // Schreier generators for the next level.
    std::vector<Perm> schreier;
    for (std::size_t qi = 0; qi < lv.orbit.size(); ++qi) {
      int x = lv.orbit[qi];
      const Perm& tx = *lv.transversal[x];
      for (const Perm& s : lv.gens) {
        int y = s[x];
        if (!lv.transversal[y]) {
          lv.transversal[y] = tx * s;
          lv.orbit.push_back(y);
        } else {
          Perm sg = tx * s * lv.transversal[y]->inverse();
          if (!sg.is_identity()) schreier.push_back(std::move(sg));
        }
      }
    }
    for (const Perm& sg : schreier) {
      Perm r = sg;
      std::size_t i = level;  // sg fixes base points up to and including this level
      bool ok = true;
      for (; i < levels_.size(); ++i) {
        const Level& l2 = levels_[i];
        int x = r[l2.base];
        if (x == l2.base) continue;
        if (!l2.transversal[x]) { ok = false; break; }
        r = r * l2.transversal[x]->inverse();
      }
      if (ok && r.is_identity()) continue;
      if (ok) {
        Level nl;
        nl.base = r.smallest_moved_point();
        nl.transversal.assign(degree_, std::nullopt);
        nl.transversal[nl.base] = Perm(degree_);
        nl.orbit = {nl.base};
        levels_.push_back(std::move(nl));
        add_generator(levels_.size() - 1, r);
      } else {
        add_generator(i, r);
      }
    }
  }

  void recompute_order() {
    order_ = 1;
    for (const Level& lv : levels_) order_ *= static_cast<unsigned long>(lv.orbit.size());
  }

  int degree_;
  mpz_class order_;
  std::vector<Level> levels_;
};

}  // namespace pilift

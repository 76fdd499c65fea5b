#pragma once

// PermGroup: a finite permutation group with a verified stabilizer chain,
// cached element list and conjugacy class data.  Values are immutable after
// construction and cheap to copy (shared internal state); the lazy caches
// are guarded by a mutex so groups can be shared across threads.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "pilift/classes.hpp"
#include "pilift/error.hpp"
#include "pilift/perm.hpp"
#include "pilift/primes.hpp"
#include "pilift/stabchain.hpp"

namespace pilift {

// Global size guards.  The CLI maps --guard-order / PILIFT_GUARD_ORDER here.
struct Guards {
  long order = 1000000;     // structure computations refuse larger groups
  int classes = 400;        // character tables refuse more classes
  long elements = 1000000;  // element enumeration cap
  int subgroups = 20000;    // subgroup-enumeration cap
  long class_random_threshold = 50000;  // above this, class search is randomized
  bool fast = false;        // skip exhaustive uniqueness assertions
};

inline Guards& guards() {
  static Guards g;
  return g;
}

namespace detail {

struct GroupData {
  int degree = 0;
  std::vector<Perm> gens;
  StabChain chain;
  mpz_class order;
  std::string name;

  mutable std::mutex mu;
  mutable std::optional<std::vector<Perm>> elements;  // sorted
  mutable std::optional<ClassData> classes;
};

}  // namespace detail

class PermGroup {
 public:
  PermGroup() : d_(std::make_shared<detail::GroupData>()) {
    d_->chain = StabChain(0, {});
    d_->order = 1;
  }

  static PermGroup from_generators(int degree, std::vector<Perm> gens,
                                   std::string name = "") {
    if (degree < 0) throw InputError("group degree must be non-negative");
    auto d = std::make_shared<detail::GroupData>();
    d->degree = degree;
    d->gens = std::move(gens);
    d->chain = StabChain(degree, d->gens);
    d->order = d->chain.order();
    d->name = std::move(name);
    PermGroup g;
    g.d_ = std::move(d);
    return g;
  }

  static PermGroup trivial(int degree) { return from_generators(degree, {}, "1"); }

  int degree() const { return d_->degree; }
  const std::vector<Perm>& generators() const { return d_->gens; }
  const mpz_class& order() const { return d_->order; }
  const StabChain& chain() const { return d_->chain; }
  const std::string& name() const { return d_->name; }
  void set_name(const std::string& n) const { d_->name = n; }

  std::uint64_t order_u64() const { return to_u64(d_->order, "group order"); }
  bool is_trivial() const { return d_->order == 1; }
  Perm identity() const { return Perm(d_->degree); }

  bool contains(const Perm& g) const { return d_->chain.contains(g); }

  bool contains(const PermGroup& h) const {
    if (h.degree() != degree()) return false;
    for (const Perm& g : h.generators())
      if (!contains(g)) return false;
    return true;
  }

  bool same_group_as(const PermGroup& h) const {
    return degree() == h.degree() && order() == h.order() && contains(h);
  }

  bool is_abelian() const {
    const auto& gs = d_->gens;
    for (std::size_t i = 0; i < gs.size(); ++i)
      for (std::size_t j = i + 1; j < gs.size(); ++j)
        if (gs[i] * gs[j] != gs[j] * gs[i]) return false;
    return true;
  }

  // Sorted list of all elements.
  const std::vector<Perm>& elements() const {
    std::lock_guard<std::mutex> lk(d_->mu);
    if (!d_->elements) {
      if (d_->order > guards().elements)
        throw GuardError("element enumeration refused: order " + d_->order.get_str() +
                         " exceeds element guard " + std::to_string(guards().elements));
      auto es = d_->chain.elements();
      std::sort(es.begin(), es.end());
      d_->elements = std::move(es);
    }
    return *d_->elements;
  }

  template <class Rng>
  Perm random_element(Rng& rng) const {
    return d_->chain.random_element(rng);
  }

  const ClassData& classes() const {
    std::lock_guard<std::mutex> lk(d_->mu);
    if (!d_->classes) d_->classes = compute_classes();
    return *d_->classes;
  }

  int class_count() const { return classes().count(); }
  int class_of(const Perm& g) const { return classes().class_of(g); }

  long exponent() const { return classes().exponent(); }

  // Stable identity for caches; two PermGroup values wrapping the same data
  // compare equal here even if another equal group exists elsewhere.
  const void* data_id() const { return d_.get(); }

 private:
  ClassData compute_classes() const {
    if (d_->order > guards().elements)
      throw GuardError("conjugacy classes refused: order exceeds element guard");
    const std::uint64_t n = to_u64(d_->order, "group order");

    ClassData cd;
    cd.member_class.reserve(n * 2);
    auto close_class = [&](const Perm& seed) {
      // Orbit of seed under conjugation by the generators.
      int id = static_cast<int>(cd.reps.size());
      std::vector<Perm> frontier{seed};
      cd.member_class.emplace(seed, id);
      Perm least = seed;
      long size = 0;
      while (!frontier.empty()) {
        Perm x = std::move(frontier.back());
        frontier.pop_back();
        ++size;
        if (x < least) least = x;
        for (const Perm& g : d_->gens) {
          Perm y = Perm::conjugate(x, g);
          if (cd.member_class.emplace(y, id).second) frontier.push_back(std::move(y));
        }
      }
      cd.reps.push_back(least);
      cd.sizes.push_back(size);
      cd.orders.push_back(least.order());
    };

    if (d_->order <= guards().class_random_threshold) {
      for (const Perm& x : elements())
        if (!cd.member_class.count(x)) close_class(x);
    } else {
      // Random search for new class representatives; a full orbit closure per
      // class keeps the result exact, and the final completeness check below
      // certifies it.
      close_class(identity());
      std::mt19937_64 rng(0x9d1f5eedULL);
      std::uint64_t covered = 1;
      while (covered < n) {
        Perm x = d_->chain.random_element(rng);
        if (cd.member_class.count(x)) continue;
        close_class(x);
        covered += static_cast<std::uint64_t>(cd.sizes.back());
      }
    }

    mpz_class total = 0;
    for (long s : cd.sizes) total += s;
    if (total != d_->order)
      throw TheoremViolation("conjugacy class sizes do not sum to the group order");

    // Deterministic class order: identity first, then by element order,
    // class size and representative.
    std::vector<int> perm(cd.reps.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
      bool ia = cd.reps[a].is_identity(), ib = cd.reps[b].is_identity();
      if (ia != ib) return ia;
      if (cd.orders[a] != cd.orders[b]) return cd.orders[a] < cd.orders[b];
      if (cd.sizes[a] != cd.sizes[b]) return cd.sizes[a] < cd.sizes[b];
      return cd.reps[a] < cd.reps[b];
    });
    ClassData out;
    std::vector<int> where(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
      out.reps.push_back(cd.reps[perm[i]]);
      out.sizes.push_back(cd.sizes[perm[i]]);
      out.orders.push_back(cd.orders[perm[i]]);
      where[perm[i]] = static_cast<int>(i);
    }
    out.member_class = std::move(cd.member_class);
    for (auto& kv : out.member_class) kv.second = where[kv.second];
    return out;
  }

  std::shared_ptr<detail::GroupData> d_;
};

}  // namespace pilift

#pragma once

// Conjugacy class data: representatives (lexicographically least image array
// in each class), sizes, element orders and power maps.

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "pilift/error.hpp"
#include "pilift/perm.hpp"

namespace pilift {

struct ClassData {
  std::vector<Perm> reps;    // reps[0] is the identity
  std::vector<long> sizes;
  std::vector<long> orders;  // order of the representative (= of every member)
  std::unordered_map<Perm, int, PermHash> member_class;

  int count() const { return static_cast<int>(reps.size()); }

  int class_of(const Perm& g) const {
    auto it = member_class.find(g);
    if (it == member_class.end())
      throw PreconditionError("class_of: element does not lie in the group");
    return it->second;
  }

  // Class of rep^k.
  int power_class(int cls, long k) const { return class_of(reps[cls].power(k)); }

  int inverse_class(int cls) const { return power_class(cls, -1); }

  long exponent() const {
    long e = 1;
    for (long o : orders) e = std::lcm(e, o);
    return e;
  }
};

}  // namespace pilift

#pragma once

#include "hypcox/arith.hpp"
#include "hypcox/forms.hpp"

#include <vector>

namespace hypcox {

/// Primitive lattice vector of positive norm whose reflection preserves the
/// lattice: 2 B(r, e_i) = 0 mod Q(r) for every basis vector e_i.
struct Root {
    IntVector vector;
    Integer norm;

    friend bool operator==(const Root&, const Root&) = default;
    friend bool operator<(const Root& a, const Root& b) { return a.vector < b.vector; }
};

bool is_root(const QuadraticForm& form, const IntVector& v, const Integer& k);

/// Wraps v as a Root; throws std::invalid_argument if it is not one.
Root make_root(const QuadraticForm& form, const IntVector& v);

/// x - (2 B(r, x) / Q(r)) r.
IntVector reflect(const QuadraticForm& form, const Root& r, const IntVector& x);

/// All roots r with Q(r) = k and B(r, v0) = a, lexicographically sorted.
/// Requires Q(v0) < 0 so that the search region is bounded.
std::vector<Root> enumerate_roots(const QuadraticForm& form, const IntVector& v0,
                                  const Integer& k, const Integer& a);

/// Simple roots of the finite root system orthogonal to v0, for the positive
/// half cut out by lexicographic order of coordinates.
std::vector<Root> initial_chamber(const QuadraticForm& form, const IntVector& v0);

}  // namespace hypcox

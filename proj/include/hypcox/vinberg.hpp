#pragma once

#include "hypcox/coxeter.hpp"
#include "hypcox/forms.hpp"
#include "hypcox/roots.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace hypcox {

struct VinbergLimits {
    Rational max_height = 100;
    std::size_t max_roots = 50;
};

struct AcceptedRoot {
    Root root;
    Integer inner_v0;  // B(r, v0) <= 0
    Rational height;   // B(r, v0)^2 / Q(r)
};

/// Mirrors of a fundamental chamber accepted so far, outward from v0 in
/// order of increasing height.
struct VinbergState {
    QuadraticForm form;
    IntVector v0;
    std::vector<AcceptedRoot> accepted;
    Rational frontier = 0;  // last height fully or partially processed
    bool complete = false;

    std::vector<Root> roots() const;
    /// Rank of the span of the accepted roots.
    std::size_t span_rank() const;
};

class VinbergIncompleteError : public std::runtime_error {
public:
    VinbergIncompleteError(const std::string& what, VinbergState partial)
        : std::runtime_error(what), partial_(std::move(partial))
    {
    }
    const VinbergState& partial() const { return partial_; }

private:
    VinbergState partial_;
};

/// Vinberg's algorithm for a form of signature (n, 1): starts from the simple
/// roots orthogonal to v0, then scans candidate roots by increasing height
/// (ties: smaller norm, then lexicographic), accepting a root when it makes
/// a non-acute angle with every root accepted before it. Stops as soon as
/// the accepted mirrors bound a polyhedron of finite volume.
VinbergState run_vinberg(const QuadraticForm& form, const IntVector& v0,
                         const VinbergLimits& limits = {});

/// (1, 0, ..., 0).
IntVector default_controlling_vector(const QuadraticForm& form);

}  // namespace hypcox

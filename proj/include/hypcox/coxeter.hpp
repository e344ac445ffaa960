#pragma once

// Coxeter diagrams of acute-angled polyhedra, classification of their
// subdiagrams against the finite and affine catalogs, and Vinberg's
// finite-volume test.
//
// Bond conventions follow the normalized Gram square
//   g2(i,j) = B(r_i, r_j)^2 / (Q(r_i) Q(r_j)) = cos^2(angle):
//   0 none (pi/2), 1/4 single (pi/3), 1/2 double (pi/4), 3/4 triple (pi/6),
//   1 heavy (parallel at infinity), > 1 dashed (ultraparallel).

#include "hypcox/arith.hpp"
#include "hypcox/forms.hpp"
#include "hypcox/roots.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypcox::coxeter {

class CrystallographyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct BondLabel {
    enum class Kind { None, Finite, Heavy, Dashed };

    Kind kind = Kind::None;
    int m = 2;         // dihedral order for Finite (>= 3); 2 for None
    Rational weight;   // g2 for Dashed

    static BondLabel none() { return {}; }
    /// m = 2 gives the absent bond; m < 2 throws std::invalid_argument.
    static BondLabel finite(int m);
    static BondLabel heavy() { return {Kind::Heavy, 0, 1}; }
    static BondLabel dashed(const Rational& g2);

    bool is_none() const { return kind == Kind::None; }

    /// Text token: "3", "4", "6", "m:<k>", "inf", "dashed:p/q" ("none" for
    /// the absent bond).
    std::string token() const;
    static BondLabel parse(const std::string& token);

    friend bool operator==(const BondLabel& a, const BondLabel& b)
    {
        return a.kind == b.kind && a.m == b.m && a.weight == b.weight;
    }
};

/// Label for an exact normalized Gram square; throws CrystallographyError for
/// values in (0, 1] that are not 1/4, 1/2, 3/4 or 1.
BondLabel label_for_gram_square(const Rational& g2);

class CoxeterDiagram {
public:
    CoxeterDiagram() = default;
    /// Diagram with the given node norms and no bonds.
    explicit CoxeterDiagram(std::vector<Integer> norms);

    /// Labels derived from the table; the table is retained.
    static CoxeterDiagram from_gram_squares(std::vector<Integer> norms, RatMatrix g2);

    std::size_t size() const { return norms_.size(); }
    const Integer& norm(std::size_t i) const { return norms_[i]; }
    const std::vector<Integer>& norms() const { return norms_; }

    const BondLabel& bond(std::size_t i, std::size_t j) const { return bonds_[i][j]; }
    void set_bond(std::size_t i, std::size_t j, const BondLabel& label);

    bool has_gram_squares() const { return g2_.has_value(); }
    const RatMatrix& gram_squares() const { return *g2_; }

    friend bool operator==(const CoxeterDiagram&, const CoxeterDiagram&) = default;

private:
    std::vector<Integer> norms_;
    std::vector<std::vector<BondLabel>> bonds_;
    std::optional<RatMatrix> g2_;
};

/// Exact g2 table and labels for pairwise non-acute roots.
/// Throws std::invalid_argument if some B(r_i, r_j) > 0 and
/// CrystallographyError for an inadmissible angle.
CoxeterDiagram build_diagram(const std::vector<Root>& roots, const QuadraticForm& form);

enum class Family {
    A, B, D, E, F, G, H, I,
    AffineA, AffineB, AffineC, AffineD, AffineE, AffineF, AffineG,
};

struct ComponentType {
    Family family = Family::A;
    int n = 1;   // subscript; for I2(m) n = 2
    int m = 0;   // dihedral order, I2(m) only

    bool affine() const { return family >= Family::AffineA; }
    /// Number of nodes in the component.
    int nodes() const { return affine() ? n + 1 : n; }
    int rank() const { return n; }
    /// "A4", "B4", "I2(7)", "~A2", ...
    std::string name() const;

    friend bool operator==(const ComponentType&, const ComponentType&) = default;
};

enum class SubdiagramKind { Elliptic, Parabolic, Other };

struct SubdiagramClass {
    SubdiagramKind kind = SubdiagramKind::Elliptic;
    std::vector<ComponentType> components;  // empty for Other
    int rank = 0;                           // meaningful unless Other

    std::string describe() const;
};

SubdiagramClass classify_subdiagram(const CoxeterDiagram& diagram, const std::vector<std::size_t>& nodes);

/// Order of a finite Coxeter group of the given type.
Integer finite_group_order(const ComponentType& type);
/// Product over components; throws std::invalid_argument unless elliptic.
Integer finite_group_order(const SubdiagramClass& cls);

using NodeMask = std::uint64_t;
constexpr std::size_t kMaxNodes = 64;

std::vector<std::size_t> mask_nodes(NodeMask mask);

/// Every subset whose components are all finite or affine, discovered by
/// growing subsets in increasing node order (the family is closed under
/// taking subsets).
class SubdiagramCensus {
public:
    struct Entry {
        NodeMask mask;
        SubdiagramClass cls;
        Integer order;  // group order, elliptic entries only
    };

    explicit SubdiagramCensus(const CoxeterDiagram& diagram);

    const std::vector<Entry>& elliptic() const { return elliptic_; }
    const std::vector<Entry>& parabolic() const { return parabolic_; }

private:
    std::vector<Entry> elliptic_;
    std::vector<Entry> parabolic_;
};

/// Vinberg's criterion in hyperbolic n-space: some vertex (elliptic of rank
/// n or parabolic of rank n-1) exists, and every elliptic subdiagram of rank
/// n-1 lies in exactly two such vertex subdiagrams.
bool finite_volume_check(const CoxeterDiagram& diagram, int n);

/// Number of node permutations preserving norms and the g2 table (the bond
/// labels, including dashed weights, when no table is present).
std::uint64_t diagram_automorphism_order(const CoxeterDiagram& diagram);

// Text format: "node <idx> norm=<k>" lines then "bond <i> <j> <label>" lines.
std::string format_diagram(const CoxeterDiagram& diagram);
CoxeterDiagram parse_diagram(std::istream& in);
CoxeterDiagram parse_diagram(const std::string& text);

/// Graphviz description; multiplicity as edge label, heavy bonds bold and
/// dashed bonds dashed.
std::string to_dot(const CoxeterDiagram& diagram, const std::string& name = "coxeter");

}  // namespace hypcox::coxeter

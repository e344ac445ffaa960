#pragma once

#include "hypcox/arith.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hypcox {

class DegenerateFormError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Signature {
    int positive = 0;
    int negative = 0;

    int dim() const { return positive + negative; }
    friend bool operator==(const Signature&, const Signature&) = default;
};

std::ostream& operator<<(std::ostream& os, const Signature& s);

/// Signature of a symmetric integer matrix by exact congruent
/// diagonalization over Q. Throws DegenerateFormError when det = 0.
Signature signature(const IntMatrix& gram);

/// Integral quadratic form Q(x) = x^T G x with symmetric nondegenerate G.
/// B(x, y) = x^T G y is the associated bilinear form (so Q(x) = B(x, x)).
class QuadraticForm {
public:
    explicit QuadraticForm(IntMatrix gram);

    static QuadraticForm diagonal(const IntVector& entries);

    std::size_t dim() const { return gram_.size(); }
    const IntMatrix& gram() const { return gram_; }
    const Signature& signature() const { return signature_; }

    Integer inner(const IntVector& x, const IntVector& y) const;
    Integer norm(const IntVector& x) const { return inner(x, x); }

    /// Diagonal entries when the Gram matrix is diagonal, empty otherwise.
    IntVector diagonal_entries() const;
    bool is_diagonal() const;

    friend bool operator==(const QuadraticForm& a, const QuadraticForm& b)
    {
        return a.gram_ == b.gram_;
    }

private:
    IntMatrix gram_;
    Signature signature_;
};

inline Signature signature(const QuadraticForm& form) { return form.signature(); }

/// Invariant factors of an integer matrix (Smith normal form diagonal),
/// nonnegative and each dividing the next.
IntVector smith_invariants(const IntMatrix& m);

/// Exponent of the discriminant group L^* / L.
Integer discriminant_exponent(const QuadraticForm& form);

/// Norms k a crystallographic primitive vector can have: the divisors of
/// 2 * discriminant_exponent, ascending.
std::vector<Integer> candidate_root_norms(const QuadraticForm& form);

// ---------------------------------------------------------------------------
// Z[sqrt 3]

/// a + b*sqrt(3).
struct QuadRingElement {
    Integer a = 0;
    Integer b = 0;

    QuadRingElement() = default;
    QuadRingElement(Integer a_, Integer b_ = 0) : a(std::move(a_)), b(std::move(b_)) {}
    QuadRingElement(long a_, long b_ = 0) : a(a_), b(b_) {}

    QuadRingElement conjugate() const { return {a, -b}; }
    friend bool operator==(const QuadRingElement&, const QuadRingElement&) = default;
};

/// -1 for negative, 0 for zero, +1 for positive under sqrt(3) -> +1.732...
int sign(const QuadRingElement& x);

/// Accepts "a", "a+b*r3", "a-b*r3" and "b*r3".
QuadRingElement parse_quad_ring(const std::string& text);
std::string to_string(const QuadRingElement& x);

class QuadRingForm {
public:
    using Matrix = std::vector<std::vector<QuadRingElement>>;

    /// Requires a square symmetric matrix; embeddings are not checked here.
    explicit QuadRingForm(Matrix gram);

    static QuadRingForm diagonal(const std::vector<QuadRingElement>& entries);

    std::size_t dim() const { return gram_.size(); }
    const Matrix& gram() const { return gram_; }

    /// Entry-wise Galois conjugate sqrt(3) -> -sqrt(3).
    QuadRingForm conjugate() const;

private:
    Matrix gram_;
};

/// Signatures under sqrt(3) -> +sqrt(3) and sqrt(3) -> -sqrt(3).
std::pair<Signature, Signature> conjugate_signature_pair(const QuadRingForm& form);

/// Galois-conjugation test on a rank-5 form: true iff one embedding is
/// hyperbolic, (4,1) or (1,4), and the other has mixed signature (3,2) or
/// (2,3). Throws std::invalid_argument when dim != 5.
bool nonarithmeticity_witness(const QuadRingForm& form);

// ---------------------------------------------------------------------------
// Text format
//
//   dim <n>
//   diag a1 ... an          or         n rows of n entries
//
// Integral forms use integer entries, Z[sqrt 3] forms use a+b*r3 entries.

QuadraticForm parse_form(std::istream& in);
QuadraticForm parse_form(const std::string& text);
QuadRingForm parse_quad_ring_form(std::istream& in);
QuadRingForm parse_quad_ring_form(const std::string& text);

std::string format_form(const QuadraticForm& form);
std::string format_form(const QuadRingForm& form);

/// "-1,3,3,1,1" -> diag(-1,3,3,1,1).
QuadraticForm parse_diag_csv(const std::string& csv);

}  // namespace hypcox

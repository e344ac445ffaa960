#include "hypcox/forms.hpp"

#include <algorithm>
#include <istream>
#include <regex>
#include <sstream>

namespace hypcox {

std::ostream& operator<<(std::ostream& os, const Signature& s)
{
    return os << "(" << s.positive << "," << s.negative << ")";
}

namespace {

// Q(sqrt 3) with rational coordinates; only what the diagonalization needs.
struct RealQuadratic {
    Rational a = 0;
    Rational b = 0;

    bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }
    friend RealQuadratic operator+(const RealQuadratic& x, const RealQuadratic& y)
    {
        return {x.a + y.a, x.b + y.b};
    }
    friend RealQuadratic operator-(const RealQuadratic& x, const RealQuadratic& y)
    {
        return {x.a - y.a, x.b - y.b};
    }
    friend RealQuadratic operator*(const RealQuadratic& x, const RealQuadratic& y)
    {
        return {x.a * y.a + 3 * x.b * y.b, x.a * y.b + x.b * y.a};
    }
    friend RealQuadratic operator/(const RealQuadratic& x, const RealQuadratic& y)
    {
        Rational n = y.a * y.a - 3 * y.b * y.b;
        RealQuadratic inv{y.a / n, -y.b / n};
        return x * inv;
    }
};

// Sign of a + b*sqrt(3) without leaving the rationals.
template <class T>
int sign_sqrt3(const T& a, const T& b)
{
    int sa = sgn(a);
    int sb = sgn(b);
    if (sb == 0)
        return sa;
    if (sa == 0)
        return sb;
    if (sa == sb)
        return sa;
    // Opposite signs: compare a^2 with 3b^2.
    int cmp_sq = sgn(T(a * a - 3 * b * b));
    return cmp_sq > 0 ? sa : -sa;
}

bool is_zero(const Rational& q) { return sgn(q) == 0; }
bool is_zero(const RealQuadratic& x) { return x.is_zero(); }
int field_sign(const Rational& q) { return sgn(q); }
int field_sign(const RealQuadratic& x) { return sign_sqrt3(x.a, x.b); }

// Congruent diagonalization A -> P^T A P with symmetric pivoting. A zero
// diagonal with a nonzero off-diagonal entry A[i][j] is repaired by adding
// row/column j to row/column i, which puts 2*A[i][j] on the diagonal.
template <class Field>
Signature congruence_signature(std::vector<std::vector<Field>> a)
{
    const std::size_t n = a.size();
    Signature sig;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = n;
        for (std::size_t i = k; i < n; ++i)
            if (!is_zero(a[i][i])) {
                piv = i;
                break;
            }
        if (piv == n) {
            std::size_t pi = n, pj = n;
            for (std::size_t i = k; i < n && pi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (!is_zero(a[i][j])) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi == n)
                throw DegenerateFormError("degenerate form: zero determinant");
            for (std::size_t c = 0; c < n; ++c)
                a[pi][c] = a[pi][c] + a[pj][c];
            for (std::size_t r = 0; r < n; ++r)
                a[r][pi] = a[r][pi] + a[r][pj];
            piv = pi;
        }
        if (piv != k) {
            std::swap(a[piv], a[k]);
            for (auto& row : a)
                std::swap(row[piv], row[k]);
        }
        const Field pivot = a[k][k];
        for (std::size_t r = k + 1; r < n; ++r) {
            if (is_zero(a[r][k]))
                continue;
            const Field f = a[r][k] / pivot;
            for (std::size_t c = k; c < n; ++c)
                a[r][c] = a[r][c] - f * a[k][c];
            for (std::size_t c = k; c < n; ++c)
                a[c][r] = a[r][c];
        }
        (field_sign(pivot) > 0 ? sig.positive : sig.negative)++;
    }
    return sig;
}

void require_square_symmetric(const IntMatrix& m)
{
    if (m.empty())
        throw std::invalid_argument("form must have positive dimension");
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != m.size())
            throw std::invalid_argument("Gram matrix is not square");
        for (std::size_t j = 0; j < i; ++j)
            if (m[i][j] != m[j][i])
                throw std::invalid_argument("Gram matrix is not symmetric");
    }
}

}  // namespace

Signature signature(const IntMatrix& gram)
{
    require_square_symmetric(gram);
    RatMatrix a(gram.size(), std::vector<Rational>(gram.size()));
    for (std::size_t i = 0; i < gram.size(); ++i)
        for (std::size_t j = 0; j < gram.size(); ++j)
            a[i][j] = gram[i][j];
    return congruence_signature(std::move(a));
}

QuadraticForm::QuadraticForm(IntMatrix gram) : gram_(std::move(gram))
{
    signature_ = hypcox::signature(gram_);
}

QuadraticForm QuadraticForm::diagonal(const IntVector& entries)
{
    IntMatrix g(entries.size(), IntVector(entries.size(), 0));
    for (std::size_t i = 0; i < entries.size(); ++i)
        g[i][i] = entries[i];
    return QuadraticForm(std::move(g));
}

Integer QuadraticForm::inner(const IntVector& x, const IntVector& y) const
{
    if (x.size() != dim() || y.size() != dim())
        throw std::invalid_argument("vector length does not match form dimension");
    Integer s = 0;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (sgn(x[i]) == 0)
            continue;
        Integer row = 0;
        for (std::size_t j = 0; j < dim(); ++j)
            row += gram_[i][j] * y[j];
        s += x[i] * row;
    }
    return s;
}

bool QuadraticForm::is_diagonal() const
{
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j)
            if (i != j && gram_[i][j] != 0)
                return false;
    return true;
}

IntVector QuadraticForm::diagonal_entries() const
{
    if (!is_diagonal())
        return {};
    IntVector d(dim());
    for (std::size_t i = 0; i < dim(); ++i)
        d[i] = gram_[i][i];
    return d;
}

IntVector smith_invariants(const IntMatrix& input)
{
    IntMatrix a = input;
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    const std::size_t n = std::min(rows, cols);
    IntVector diag;
    for (std::size_t t = 0; t < n; ++t) {
        // Bring the smallest nonzero entry of the remaining block to (t,t),
        // then clear its row and column; repeat until it divides everything.
        for (;;) {
            std::size_t pr = rows, pc = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
                        pr = i;
                        pc = j;
                    }
            if (pr == rows) {
                diag.resize(n, 0);
                return diag;
            }
            std::swap(a[t], a[pr]);
            for (auto& row : a)
                std::swap(row[t], row[pc]);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
                if (q != 0)
                    for (std::size_t j = t; j < cols; ++j)
                        a[i][j] -= q * a[t][j];
                if (a[i][t] != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
                if (q != 0)
                    for (std::size_t i = t; i < rows; ++i)
                        a[i][j] -= q * a[i][t];
                if (a[t][j] != 0)
                    clean = false;
            }
            if (!clean)
                continue;
            // Divisibility: fold an offending row into row t.
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (bad == rows)
                break;
            for (std::size_t j = t; j < cols; ++j)
                a[t][j] += a[bad][j];
        }
        diag.push_back(abs(a[t][t]));
    }
    return diag;
}

Integer discriminant_exponent(const QuadraticForm& form)
{
    const IntVector inv = smith_invariants(form.gram());
    // Nondegenerate, so every factor is positive and the last is the largest.
    return inv.back();
}

std::vector<Integer> candidate_root_norms(const QuadraticForm& form)
{
    const Integer bound = 2 * discriminant_exponent(form);
    std::vector<Integer> out;
    for (Integer d = 1; d * d <= bound; ++d)
        if (bound % d == 0) {
            out.push_back(d);
            if (d * d != bound)
                out.push_back(bound / d);
        }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------

int sign(const QuadRingElement& x) { return sign_sqrt3(x.a, x.b); }

QuadRingElement parse_quad_ring(const std::string& text)
{
    static const std::regex full(R"(\s*([+-]?\d+)\s*(?:([+-])\s*(\d+)\s*\*\s*r3)?\s*)");
    static const std::regex pure(R"(\s*([+-]?\d+)\s*\*\s*r3\s*)");
    std::smatch m;
    if (std::regex_match(text, m, full)) {
        Integer a(m[1].str());
        Integer b = 0;
        if (m[2].matched) {
            b = Integer(m[3].str());
            if (m[2].str() == "-")
                b = -b;
        }
        return {a, b};
    }
    if (std::regex_match(text, m, pure))
        return {0, Integer(m[1].str())};
    throw FormatError("malformed Z[sqrt3] entry: '" + text + "'");
}

std::string to_string(const QuadRingElement& x)
{
    if (x.b == 0)
        return x.a.get_str();
    std::string out = x.a.get_str();
    out += x.b < 0 ? "-" : "+";
    out += Integer(abs(x.b)).get_str();
    out += "*r3";
    return out;
}

QuadRingForm::QuadRingForm(Matrix gram) : gram_(std::move(gram))
{
    if (gram_.empty())
        throw std::invalid_argument("form must have positive dimension");
    for (std::size_t i = 0; i < gram_.size(); ++i) {
        if (gram_[i].size() != gram_.size())
            throw std::invalid_argument("Gram matrix is not square");
        for (std::size_t j = 0; j < i; ++j)
            if (!(gram_[i][j] == gram_[j][i]))
                throw std::invalid_argument("Gram matrix is not symmetric");
    }
}

QuadRingForm QuadRingForm::diagonal(const std::vector<QuadRingElement>& entries)
{
    Matrix g(entries.size(), std::vector<QuadRingElement>(entries.size()));
    for (std::size_t i = 0; i < entries.size(); ++i)
        g[i][i] = entries[i];
    return QuadRingForm(std::move(g));
}

QuadRingForm QuadRingForm::conjugate() const
{
    Matrix g = gram_;
    for (auto& row : g)
        for (auto& e : row)
            e = e.conjugate();
    return QuadRingForm(std::move(g));
}

namespace {

Signature real_quadratic_signature(const QuadRingForm& form)
{
    std::vector<std::vector<RealQuadratic>> a(form.dim(), std::vector<RealQuadratic>(form.dim()));
    for (std::size_t i = 0; i < form.dim(); ++i)
        for (std::size_t j = 0; j < form.dim(); ++j)
            a[i][j] = {Rational(form.gram()[i][j].a), Rational(form.gram()[i][j].b)};
    return congruence_signature(std::move(a));
}

}  // namespace

std::pair<Signature, Signature> conjugate_signature_pair(const QuadRingForm& form)
{
    return {real_quadratic_signature(form), real_quadratic_signature(form.conjugate())};
}

bool nonarithmeticity_witness(const QuadRingForm& form)
{
    if (form.dim() != 5)
        throw std::invalid_argument("nonarithmeticity test needs a rank-5 form");
    const auto [plus, minus] = conjugate_signature_pair(form);
    auto hyperbolic = [](const Signature& s) {
        return s == Signature{4, 1} || s == Signature{1, 4};
    };
    auto mixed = [](const Signature& s) {
        return s == Signature{3, 2} || s == Signature{2, 3};
    };
    return (hyperbolic(plus) && mixed(minus)) || (hyperbolic(minus) && mixed(plus));
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> tokens_of(const std::string& line)
{
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string t;
    while (ss >> t)
        out.push_back(t);
    return out;
}

// Reads the shared "dim n" + diag/rows layout into a string matrix.
std::vector<std::vector<std::string>> read_form_tokens(std::istream& in)
{
    std::vector<std::vector<std::string>> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        auto toks = tokens_of(line);
        if (!toks.empty())
            lines.push_back(std::move(toks));
    }
    if (lines.empty() || lines[0].size() != 2 || lines[0][0] != "dim")
        throw FormatError("form file must start with 'dim <n>'");
    std::size_t n = 0;
    try {
        n = std::stoul(lines[0][1]);
    } catch (const std::exception&) {
        throw FormatError("bad dimension '" + lines[0][1] + "'");
    }
    if (n == 0)
        throw FormatError("dimension must be positive");

    std::vector<std::vector<std::string>> m(n, std::vector<std::string>(n, "0"));
    if (lines.size() >= 2 && lines[1][0] == "diag") {
        if (lines.size() != 2 || lines[1].size() != n + 1)
            throw FormatError("'diag' line must carry exactly " + std::to_string(n) + " entries");
        for (std::size_t i = 0; i < n; ++i)
            m[i][i] = lines[1][i + 1];
        return m;
    }
    if (lines.size() != n + 1)
        throw FormatError("expected " + std::to_string(n) + " Gram rows");
    for (std::size_t i = 0; i < n; ++i) {
        if (lines[i + 1].size() != n)
            throw FormatError("Gram row " + std::to_string(i) + " has wrong length");
        m[i] = lines[i + 1];
    }
    return m;
}

Integer parse_integer(const std::string& t)
{
    static const std::regex re(R"([+-]?\d+)");
    if (!std::regex_match(t, re))
        throw FormatError("not an integer: '" + t + "'");
    return Integer(t[0] == '+' ? t.substr(1) : t);
}

}  // namespace

QuadraticForm parse_form(std::istream& in)
{
    const auto toks = read_form_tokens(in);
    IntMatrix g(toks.size(), IntVector(toks.size()));
    for (std::size_t i = 0; i < toks.size(); ++i)
        for (std::size_t j = 0; j < toks.size(); ++j)
            g[i][j] = parse_integer(toks[i][j]);
    try {
        return QuadraticForm(std::move(g));
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

QuadraticForm parse_form(const std::string& text)
{
    std::istringstream ss(text);
    return parse_form(ss);
}

QuadRingForm parse_quad_ring_form(std::istream& in)
{
    const auto toks = read_form_tokens(in);
    QuadRingForm::Matrix g(toks.size(), std::vector<QuadRingElement>(toks.size()));
    for (std::size_t i = 0; i < toks.size(); ++i)
        for (std::size_t j = 0; j < toks.size(); ++j)
            g[i][j] = parse_quad_ring(toks[i][j]);
    try {
        return QuadRingForm(std::move(g));
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

QuadRingForm parse_quad_ring_form(const std::string& text)
{
    std::istringstream ss(text);
    return parse_quad_ring_form(ss);
}

namespace {

template <class Entry, class Fmt>
std::string format_matrix(const std::vector<std::vector<Entry>>& g, bool diagonal, Fmt fmt)
{
    std::ostringstream out;
    out << "dim " << g.size() << "\n";
    if (diagonal) {
        out << "diag";
        for (std::size_t i = 0; i < g.size(); ++i)
            out << " " << fmt(g[i][i]);
        out << "\n";
        return out.str();
    }
    for (const auto& row : g) {
        for (std::size_t j = 0; j < row.size(); ++j)
            out << (j ? " " : "") << fmt(row[j]);
        out << "\n";
    }
    return out.str();
}

}  // namespace

std::string format_form(const QuadraticForm& form)
{
    return format_matrix(form.gram(), form.is_diagonal(), [](const Integer& z) { return z.get_str(); });
}

std::string format_form(const QuadRingForm& form)
{
    bool diagonal = true;
    for (std::size_t i = 0; i < form.dim(); ++i)
        for (std::size_t j = 0; j < form.dim(); ++j)
            if (i != j && !(form.gram()[i][j] == QuadRingElement{}))
                diagonal = false;
    return format_matrix(form.gram(), diagonal,
                         [](const QuadRingElement& x) { return to_string(x); });
}

QuadraticForm parse_diag_csv(const std::string& csv)
{
    IntVector entries;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto toks = tokens_of(item);
        if (toks.size() != 1)
            throw FormatError("bad --diag entry '" + item + "'");
        entries.push_back(parse_integer(toks[0]));
    }
    if (entries.empty())
        throw FormatError("--diag needs at least one entry");
    return QuadraticForm::diagonal(entries);
}

}  // namespace hypcox

#include "hypcox/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace hypcox {

bool is_root(const QuadraticForm& form, const IntVector& v, const Integer& k)
{
    if (k <= 0 || v.size() != form.dim())
        return false;
    if (form.norm(v) != k || !is_primitive(v))
        return false;
    // 2 B(v, e_i) = 2 (G v)_i
    const IntVector gv = mat_vec(form.gram(), v);
    for (const auto& c : gv)
        if ((2 * c) % k != 0)
            return false;
    return true;
}

Root make_root(const QuadraticForm& form, const IntVector& v)
{
    Integer k = form.norm(v);
    if (!is_root(form, v, k))
        throw std::invalid_argument("not a root: " + to_string(v));
    return {v, k};
}

IntVector reflect(const QuadraticForm& form, const Root& r, const IntVector& x)
{
    const Integer num = 2 * form.inner(r.vector, x);
    // Exact by the crystallographic condition.
    Integer c;
    mpz_divexact(c.get_mpz_t(), num.get_mpz_t(), r.norm.get_mpz_t());
    IntVector out = x;
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] -= c * r.vector[i];
    return out;
}

namespace {

// Search over the positive definite majorant
//   P(x) = Q(x) + 2 B(x, v0)^2 / |Q(v0)|,
// which equals k + 2a^2/|Q(v0)| on the target set. Coordinates are visited in
// Fincke-Pohst order; the pivot coordinate (where G v0 is nonzero) comes last
// and is solved from the linear constraint B(x, v0) = a.
class RootSearch {
public:
    RootSearch(const QuadraticForm& form, const IntVector& v0, const Integer& k, const Integer& a)
        : form_(form), k_(k), a_(a), n_(form.dim())
    {
        const Integer q0 = form.norm(v0);
        if (q0 >= 0)
            throw std::invalid_argument("controlling vector must have negative norm");
        w_ = mat_vec(form.gram(), v0);
        const Integer absq0 = -q0;

        std::size_t pivot = n_;
        for (std::size_t i = 0; i < n_; ++i)
            if (w_[i] != 0) {
                pivot = i;
                break;
            }
        perm_.push_back(pivot);
        for (std::size_t i = 0; i < n_; ++i)
            if (i != pivot)
                perm_.push_back(i);

        // Fincke-Pohst coefficients of P in permuted coordinates.
        q_.assign(n_, std::vector<Rational>(n_));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) {
                const std::size_t pi = perm_[i], pj = perm_[j];
                q_[i][j] = Rational(form.gram()[pi][pj]) + Rational(2 * w_[pi] * w_[pj], absq0);
            }
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = i + 1; j < n_; ++j) {
                q_[j][i] = q_[i][j];
                q_[i][j] /= q_[i][i];
            }
            for (std::size_t r = i + 1; r < n_; ++r)
                for (std::size_t c = r; c < n_; ++c)
                    q_[r][c] -= q_[r][i] * q_[i][c];
        }
        bound_ = Rational(k) + Rational(2 * a * a, absq0);
        y_.assign(n_, 0);
    }

    std::vector<Root> run()
    {
        if (n_ == 1) {
            visit_pivot();
        } else {
            descend(n_ - 1, bound_);
        }
        std::sort(found_.begin(), found_.end());
        return std::move(found_);
    }

private:
    Rational center(std::size_t i) const
    {
        Rational c = 0;
        for (std::size_t j = i + 1; j < n_; ++j)
            if (y_[j] != 0)
                c -= q_[i][j] * y_[j];
        return c;
    }

    void descend(std::size_t i, const Rational& remaining)
    {
        const Rational c = center(i);
        const double radius = std::sqrt(std::max(0.0, Rational(remaining / q_[i][i]).get_d()));
        const double cd = c.get_d();
        // One unit of slack on each side; the exact test below decides.
        const long lo = static_cast<long>(std::floor(cd - radius)) - 1;
        const long hi = static_cast<long>(std::ceil(cd + radius)) + 1;
        for (long y = lo; y <= hi; ++y) {
            const Rational d = Rational(y) - c;
            const Rational rest = remaining - q_[i][i] * d * d;
            if (sgn(rest) < 0)
                continue;
            y_[i] = y;
            if (i == 1)
                visit_pivot();
            else
                descend(i - 1, rest);
        }
        y_[i] = 0;
    }

    // Solve B(x, v0) = a for the pivot coordinate and test the candidate.
    void visit_pivot()
    {
        const std::size_t p = perm_[0];
        Integer rhs = a_;
        for (std::size_t i = 1; i < n_; ++i)
            rhs -= w_[perm_[i]] * y_[i];
        if (rhs % w_[p] != 0)
            return;
        IntVector x(n_);
        x[p] = rhs / w_[p];
        for (std::size_t i = 1; i < n_; ++i)
            x[perm_[i]] = y_[i];
        if (is_root(form_, x, k_))
            found_.push_back({std::move(x), k_});
    }

    const QuadraticForm& form_;
    Integer k_;
    Integer a_;
    std::size_t n_;
    IntVector w_;
    std::vector<std::size_t> perm_;
    std::vector<std::vector<Rational>> q_;
    Rational bound_;
    IntVector y_;
    std::vector<Root> found_;
};

bool lex_positive(const IntVector& v)
{
    for (const auto& c : v)
        if (c != 0)
            return c > 0;
    return false;
}

}  // namespace

std::vector<Root> enumerate_roots(const QuadraticForm& form, const IntVector& v0,
                                  const Integer& k, const Integer& a)
{
    if (v0.size() != form.dim())
        throw std::invalid_argument("controlling vector has wrong length");
    if (k <= 0)
        return {};
    return RootSearch(form, v0, k, a).run();
}

std::vector<Root> initial_chamber(const QuadraticForm& form, const IntVector& v0)
{
    std::vector<IntVector> positive;
    for (const auto& k : candidate_root_norms(form))
        for (auto& r : enumerate_roots(form, v0, k, 0))
            if (lex_positive(r.vector))
                positive.push_back(std::move(r.vector));

    std::set<IntVector> as_set(positive.begin(), positive.end());
    std::set<IntVector> decomposable;
    for (std::size_t i = 0; i < positive.size(); ++i)
        for (std::size_t j = i + 1; j < positive.size(); ++j) {
            IntVector s = positive[i];
            for (std::size_t c = 0; c < s.size(); ++c)
                s[c] += positive[j][c];
            if (as_set.count(s))
                decomposable.insert(std::move(s));
        }

    std::vector<Root> simple;
    for (const auto& v : as_set)
        if (!decomposable.count(v))
            simple.push_back({v, form.norm(v)});
    return simple;
}

}  // namespace hypcox

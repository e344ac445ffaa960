#include "hypcox/vinberg.hpp"

#include <set>
#include <tuple>

namespace hypcox {

std::vector<Root> VinbergState::roots() const
{
    std::vector<Root> out;
    for (const auto& a : accepted)
        out.push_back(a.root);
    return out;
}

std::size_t VinbergState::span_rank() const
{
    RatMatrix rows;
    for (const auto& a : accepted) {
        std::vector<Rational> row;
        for (const auto& c : a.root.vector)
            row.emplace_back(c);
        rows.push_back(std::move(row));
    }
    std::size_t rank = 0;
    const std::size_t cols = form.dim();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && sgn(rows[piv][c]) == 0)
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[piv], rows[rank]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (sgn(rows[r][c]) == 0)
                continue;
            const Rational f = rows[r][c] / rows[rank][c];
            for (std::size_t k = c; k < cols; ++k)
                rows[r][k] -= f * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

IntVector default_controlling_vector(const QuadraticForm& form)
{
    for (std::size_t i = 0; i < form.dim(); ++i)
        if (form.gram()[i][i] < 0) {
            IntVector v(form.dim(), 0);
            v[i] = 1;
            return v;
        }
    throw std::invalid_argument("no basis vector of negative norm; pass a controlling vector explicitly");
}

namespace {

struct Batch {
    Rational height;
    Integer norm;
    Integer inner;  // B(r, v0), negative

    bool operator<(const Batch& o) const
    {
        if (height != o.height)
            return height < o.height;
        return norm < o.norm;
    }
};

Batch make_batch(const Integer& k, const Integer& a)
{
    Rational h(Integer(a * a), k);
    h.canonicalize();
    return {h, k, a};
}

}  // namespace

VinbergState run_vinberg(const QuadraticForm& form, const IntVector& v0, const VinbergLimits& limits)
{
    if (form.signature().negative != 1)
        throw std::invalid_argument("Vinberg's algorithm needs a form of signature (n,1)");
    if (form.norm(v0) >= 0)
        throw std::invalid_argument("controlling vector must have negative norm");
    const int n = static_cast<int>(form.dim()) - 1;

    VinbergState state{form, v0, {}, 0, false};
    auto fail = [&](const std::string& why) {
        throw VinbergIncompleteError(why + " after " + std::to_string(state.accepted.size()) +
                                         " roots (frontier height " + to_string(state.frontier) + ")",
                                     state);
    };

    auto accept = [&](Root r, const Integer& a, const Rational& h) {
        state.accepted.push_back({std::move(r), a, h});
        if (state.accepted.size() > limits.max_roots)
            fail("root limit " + std::to_string(limits.max_roots) + " exceeded");
    };

    for (auto& r : initial_chamber(form, v0))
        accept(std::move(r), 0, 0);

    auto finished = [&] {
        if (state.span_rank() < form.dim())
            return false;
        return coxeter::finite_volume_check(coxeter::build_diagram(state.roots(), form), n);
    };
    if (finished()) {
        state.complete = true;
        return state;
    }

    std::set<Batch> queue;
    for (const auto& k : candidate_root_norms(form))
        queue.insert(make_batch(k, -1));

    while (!queue.empty()) {
        const Batch batch = *queue.begin();
        queue.erase(queue.begin());
        if (batch.height > limits.max_height)
            fail("height limit " + to_string(limits.max_height) + " reached");
        state.frontier = batch.height;

        for (auto& r : enumerate_roots(form, v0, batch.norm, batch.inner)) {
            bool obtuse = true;
            for (const auto& prev : state.accepted)
                if (form.inner(r.vector, prev.root.vector) > 0) {
                    obtuse = false;
                    break;
                }
            if (!obtuse)
                continue;
            accept(std::move(r), batch.inner, batch.height);
            if (finished()) {
                state.complete = true;
                return state;
            }
        }
        queue.insert(make_batch(batch.norm, batch.inner - 1));
    }
    fail("candidate queue exhausted");
    return state;
}

}  // namespace hypcox

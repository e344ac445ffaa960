#include "hypcox/coxeter.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <map>
#include <regex>
#include <sstream>
#include <unordered_map>

namespace hypcox::coxeter {

BondLabel BondLabel::finite(int m)
{
    if (m == 2)
        return none();
    if (m < 3)
        throw std::invalid_argument("finite bond labels need m >= 3");
    return {Kind::Finite, m, 0};
}

BondLabel BondLabel::dashed(const Rational& g2)
{
    if (g2 <= 1)
        throw std::invalid_argument("dashed bonds need g2 > 1");
    return {Kind::Dashed, 0, g2};
}

std::string BondLabel::token() const
{
    switch (kind) {
    case Kind::None:
        return "none";
    case Kind::Heavy:
        return "inf";
    case Kind::Dashed:
        return "dashed:" + to_string(weight);
    case Kind::Finite:
        if (m == 3 || m == 4 || m == 6)
            return std::to_string(m);
        return "m:" + std::to_string(m);
    }
    return "none";
}

BondLabel BondLabel::parse(const std::string& token)
{
    if (token == "none")
        return none();
    if (token == "3" || token == "4" || token == "6")
        return finite(std::stoi(token));
    if (token == "inf")
        return heavy();
    if (token.rfind("m:", 0) == 0) {
        static const std::regex re(R"(\d+)");
        const std::string body = token.substr(2);
        if (!std::regex_match(body, re))
            throw FormatError("bad bond label '" + token + "'");
        return finite(std::stoi(body));
    }
    if (token.rfind("dashed:", 0) == 0) {
        try {
            return dashed(parse_rational(token.substr(7)));
        } catch (const std::invalid_argument& e) {
            throw FormatError("bad bond label '" + token + "': " + e.what());
        }
    }
    throw FormatError("unknown bond label '" + token + "'");
}

BondLabel label_for_gram_square(const Rational& g2)
{
    if (sgn(g2) == 0)
        return BondLabel::none();
    if (g2 == Rational(1, 4))
        return BondLabel::finite(3);
    if (g2 == Rational(1, 2))
        return BondLabel::finite(4);
    if (g2 == Rational(3, 4))
        return BondLabel::finite(6);
    if (g2 == 1)
        return BondLabel::heavy();
    if (g2 > 1)
        return BondLabel::dashed(g2);
    throw CrystallographyError("inadmissible normalized Gram square " + to_string(g2));
}

CoxeterDiagram::CoxeterDiagram(std::vector<Integer> norms)
    : norms_(std::move(norms)), bonds_(norms_.size(), std::vector<BondLabel>(norms_.size()))
{
}

CoxeterDiagram CoxeterDiagram::from_gram_squares(std::vector<Integer> norms, RatMatrix g2)
{
    CoxeterDiagram d(std::move(norms));
    if (g2.size() != d.size())
        throw std::invalid_argument("g2 table size does not match node count");
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            if (g2[i][j] != g2[j][i])
                throw std::invalid_argument("g2 table is not symmetric");
            BondLabel label;
            try {
                label = label_for_gram_square(g2[i][j]);
            } catch (const CrystallographyError& e) {
                throw CrystallographyError("nodes " + std::to_string(i) + " and " +
                                           std::to_string(j) + ": " + e.what());
            }
            d.bonds_[i][j] = d.bonds_[j][i] = label;
        }
    d.g2_ = std::move(g2);
    return d;
}

void CoxeterDiagram::set_bond(std::size_t i, std::size_t j, const BondLabel& label)
{
    if (i == j || i >= size() || j >= size())
        throw std::out_of_range("bad bond endpoints");
    bonds_[i][j] = bonds_[j][i] = label;
    g2_.reset();
}

CoxeterDiagram build_diagram(const std::vector<Root>& roots, const QuadraticForm& form)
{
    const std::size_t n = roots.size();
    RatMatrix g2(n, std::vector<Rational>(n));
    std::vector<Integer> norms;
    for (const auto& r : roots)
        norms.push_back(r.norm);
    for (std::size_t i = 0; i < n; ++i) {
        g2[i][i] = 1;
        for (std::size_t j = i + 1; j < n; ++j) {
            const Integer b = form.inner(roots[i].vector, roots[j].vector);
            if (b > 0)
                throw std::invalid_argument("roots " + to_string(roots[i].vector) + " and " +
                                            to_string(roots[j].vector) + " meet at an acute angle");
            Rational q(b * b, roots[i].norm * roots[j].norm);
            q.canonicalize();
            g2[i][j] = g2[j][i] = q;
        }
    }
    try {
        return CoxeterDiagram::from_gram_squares(std::move(norms), std::move(g2));
    } catch (const CrystallographyError& e) {
        throw CrystallographyError(std::string("non-crystallographic angle between ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// Component catalog

std::string ComponentType::name() const
{
    static const char* letters = "ABDEFGHI";
    const int idx = static_cast<int>(family) - (affine() ? static_cast<int>(Family::AffineA) : 0);
    std::string out = affine() ? "~" : "";
    if (family == Family::I)
        return "I2(" + std::to_string(m) + ")";
    // Affine families skip H and I, so index letters through a shared table.
    static const char* affine_letters = "ABCDEFG";
    out += affine() ? affine_letters[idx] : letters[idx];
    return out + std::to_string(n);
}

std::string SubdiagramClass::describe() const
{
    if (kind == SubdiagramKind::Other)
        return "other";
    std::string out = kind == SubdiagramKind::Elliptic ? "elliptic[" : "parabolic[";
    for (std::size_t i = 0; i < components.size(); ++i)
        out += (i ? "," : "") + components[i].name();
    return out + "] rank " + std::to_string(rank);
}

namespace {

using Adjacency = std::vector<std::vector<int>>;  // local label matrix, 2 = none, 0 = heavy

struct Walk {
    std::vector<std::size_t> nodes;  // excluding the start
    std::vector<int> labels;         // label of each step
};

// Walk away from `start` through `first` until a node of degree != 2.
Walk walk_arm(const Adjacency& lab, const std::vector<int>& deg, std::size_t start, std::size_t first)
{
    Walk w;
    std::size_t prev = start, cur = first;
    w.labels.push_back(lab[start][first]);
    for (;;) {
        w.nodes.push_back(cur);
        if (deg[cur] != 2)
            break;
        std::size_t next = lab.size();
        for (std::size_t k = 0; k < lab.size(); ++k)
            if (k != prev && k != cur && lab[cur][k] != 2)
                next = k;
        w.labels.push_back(lab[cur][next]);
        prev = cur;
        cur = next;
    }
    return w;
}

std::optional<ComponentType> classify_connected(const CoxeterDiagram& d, const std::vector<std::size_t>& comp)
{
    const std::size_t n = comp.size();
    Adjacency lab(n, std::vector<int>(n, 2));
    std::vector<int> deg(n, 0);
    std::size_t edges = 0;
    bool heavy = false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const BondLabel& b = d.bond(comp[i], comp[j]);
            switch (b.kind) {
            case BondLabel::Kind::None:
                continue;
            case BondLabel::Kind::Dashed:
                return std::nullopt;
            case BondLabel::Kind::Heavy:
                heavy = true;
                lab[i][j] = lab[j][i] = 0;
                break;
            case BondLabel::Kind::Finite:
                lab[i][j] = lab[j][i] = b.m;
                break;
            }
            ++deg[i];
            ++deg[j];
            ++edges;
        }

    if (n == 1)
        return ComponentType{Family::A, 1};
    if (heavy)
        return n == 2 ? std::optional(ComponentType{Family::AffineA, 1}) : std::nullopt;
    if (n == 2) {
        switch (lab[0][1]) {
        case 3: return ComponentType{Family::A, 2};
        case 4: return ComponentType{Family::B, 2};
        case 6: return ComponentType{Family::G, 2};
        default: return ComponentType{Family::I, 2, lab[0][1]};
        }
    }

    const int N = static_cast<int>(n);
    if (edges == n) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (lab[i][j] != 2 && lab[i][j] != 3)
                    return std::nullopt;
        if (std::all_of(deg.begin(), deg.end(), [](int x) { return x == 2; }))
            return ComponentType{Family::AffineA, N - 1};
        return std::nullopt;
    }
    if (edges != n - 1)
        return std::nullopt;

    const int max_deg = *std::max_element(deg.begin(), deg.end());
    if (max_deg <= 2) {
        std::size_t leaf = std::find(deg.begin(), deg.end(), 1) - deg.begin();
        std::size_t first = 0;
        while (lab[leaf][first] == 2 || first == leaf)
            ++first;
        const Walk path = walk_arm(lab, deg, leaf, first);
        std::vector<std::size_t> special;
        for (std::size_t p = 0; p < path.labels.size(); ++p)
            if (path.labels[p] != 3)
                special.push_back(p);
        const std::size_t last = path.labels.size() - 1;
        if (special.empty())
            return ComponentType{Family::A, N};
        if (special.size() == 1) {
            const std::size_t p = special[0];
            const int m = path.labels[p];
            const bool at_end = p == 0 || p == last;
            if (m == 4 && at_end)
                return ComponentType{Family::B, N};
            if (m == 4 && N == 4)
                return ComponentType{Family::F, 4};
            if (m == 4 && N == 5)
                return ComponentType{Family::AffineF, 4};
            if (m == 6 && N == 3 && at_end)
                return ComponentType{Family::AffineG, 2};
            if (m == 5 && at_end && (N == 3 || N == 4))
                return ComponentType{Family::H, N};
            return std::nullopt;
        }
        if (special.size() == 2 && special[0] == 0 && special[1] == last &&
            path.labels[0] == 4 && path.labels[last] == 4)
            return ComponentType{Family::AffineC, N - 1};
        return std::nullopt;
    }

    if (max_deg >= 5)
        return std::nullopt;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (lab[i][j] != 2 && lab[i][j] != 3 && lab[i][j] != 4)
                return std::nullopt;

    std::vector<std::size_t> branch;
    for (std::size_t i = 0; i < n; ++i)
        if (deg[i] >= 3)
            branch.push_back(i);

    if (max_deg == 4) {
        bool simple = true;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                simple = simple && (lab[i][j] == 2 || lab[i][j] == 3);
        if (n == 5 && branch.size() == 1 && simple)
            return ComponentType{Family::AffineD, 4};
        return std::nullopt;
    }

    if (branch.size() == 1) {
        const std::size_t b = branch[0];
        std::vector<Walk> arms;
        for (std::size_t k = 0; k < n; ++k)
            if (lab[b][k] != 2)
                arms.push_back(walk_arm(lab, deg, b, k));
        int specials = 0;
        for (const auto& a : arms)
            for (int l : a.labels)
                specials += l != 3;
        std::vector<int> len;
        for (const auto& a : arms)
            len.push_back(static_cast<int>(a.nodes.size()));
        if (specials == 0) {
            std::sort(len.begin(), len.end());
            const int p = len[0], q = len[1], r = len[2];
            if (p == 1 && q == 1)
                return ComponentType{Family::D, N};
            if (p == 1 && q == 2 && r >= 2 && r <= 4)
                return ComponentType{Family::E, N};
            if (p == 2 && q == 2 && r == 2)
                return ComponentType{Family::AffineE, 6};
            if (p == 1 && q == 3 && r == 3)
                return ComponentType{Family::AffineE, 7};
            if (p == 1 && q == 2 && r == 5)
                return ComponentType{Family::AffineE, 8};
            return std::nullopt;
        }
        if (specials == 1) {
            // ~B_n: two unit arms at the fork, the double bond closing the third.
            for (std::size_t s = 0; s < arms.size(); ++s) {
                if (arms[s].labels.back() != 4)
                    continue;
                bool others_unit = true;
                for (std::size_t t = 0; t < arms.size(); ++t)
                    if (t != s)
                        others_unit = others_unit && arms[t].nodes.size() == 1;
                if (others_unit)
                    return ComponentType{Family::AffineB, N - 1};
            }
        }
        return std::nullopt;
    }

    if (branch.size() == 2) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (lab[i][j] == 4)
                    return std::nullopt;
        for (std::size_t b : branch) {
            int leaves = 0;
            for (std::size_t k = 0; k < n; ++k)
                if (lab[b][k] != 2 && deg[k] == 1)
                    ++leaves;
            if (leaves != 2)
                return std::nullopt;
        }
        return ComponentType{Family::AffineD, N - 1};
    }
    return std::nullopt;
}

// Per-diagram memoized classifier on node masks.
class MaskClassifier {
public:
    explicit MaskClassifier(const CoxeterDiagram& d) : d_(d), adj_(d.size(), 0)
    {
        if (d.size() > kMaxNodes)
            throw std::invalid_argument("diagrams are limited to 64 nodes");
        for (std::size_t i = 0; i < d.size(); ++i)
            for (std::size_t j = 0; j < d.size(); ++j)
                if (i != j && !d.bond(i, j).is_none())
                    adj_[i] |= NodeMask{1} << j;
    }

    std::vector<NodeMask> components(NodeMask mask) const
    {
        std::vector<NodeMask> out;
        while (mask) {
            NodeMask comp = mask & (~mask + 1);
            NodeMask frontier = comp;
            while (frontier) {
                const int v = std::countr_zero(frontier);
                frontier &= frontier - 1;
                const NodeMask fresh = adj_[v] & mask & ~comp;
                comp |= fresh;
                frontier |= fresh;
            }
            out.push_back(comp);
            mask &= ~comp;
        }
        return out;
    }

    const std::optional<ComponentType>& component_type(NodeMask comp)
    {
        auto it = memo_.find(comp);
        if (it == memo_.end())
            it = memo_.emplace(comp, classify_connected(d_, mask_nodes(comp))).first;
        return it->second;
    }

    /// Components in the order of their lowest node; nullopt when some
    /// component is neither finite nor affine.
    std::optional<std::vector<ComponentType>> types(NodeMask mask)
    {
        std::vector<ComponentType> out;
        for (NodeMask c : components(mask)) {
            const auto& t = component_type(c);
            if (!t)
                return std::nullopt;
            out.push_back(*t);
        }
        return out;
    }

private:
    const CoxeterDiagram& d_;
    std::vector<NodeMask> adj_;
    std::unordered_map<NodeMask, std::optional<ComponentType>> memo_;
};

SubdiagramClass class_from_types(const std::optional<std::vector<ComponentType>>& types)
{
    SubdiagramClass cls;
    if (!types) {
        cls.kind = SubdiagramKind::Other;
        return cls;
    }
    const bool all_finite = std::none_of(types->begin(), types->end(), [](const auto& t) { return t.affine(); });
    const bool all_affine = std::all_of(types->begin(), types->end(), [](const auto& t) { return t.affine(); });
    if (all_finite)
        cls.kind = SubdiagramKind::Elliptic;
    else if (all_affine)
        cls.kind = SubdiagramKind::Parabolic;
    else {
        cls.kind = SubdiagramKind::Other;
        return cls;
    }
    cls.components = *types;
    for (const auto& t : *types)
        cls.rank += t.rank();
    return cls;
}

Integer factorial(int n)
{
    Integer f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

}  // namespace

std::vector<std::size_t> mask_nodes(NodeMask mask)
{
    std::vector<std::size_t> out;
    while (mask) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
        mask &= mask - 1;
    }
    return out;
}

SubdiagramClass classify_subdiagram(const CoxeterDiagram& diagram, const std::vector<std::size_t>& nodes)
{
    MaskClassifier mc(diagram);
    NodeMask mask = 0;
    for (std::size_t v : nodes) {
        if (v >= diagram.size())
            throw std::out_of_range("node index out of range");
        mask |= NodeMask{1} << v;
    }
    return class_from_types(mc.types(mask));
}

Integer finite_group_order(const ComponentType& t)
{
    const int n = t.n;
    switch (t.family) {
    case Family::A:
        return factorial(n + 1);
    case Family::B:
        return (Integer(1) << n) * factorial(n);
    case Family::D:
        return (Integer(1) << (n - 1)) * factorial(n);
    case Family::E:
        return n == 6 ? Integer(51840) : n == 7 ? Integer(2903040) : Integer(696729600);
    case Family::F:
        return 1152;
    case Family::G:
        return 12;
    case Family::H:
        return n == 3 ? Integer(120) : Integer(14400);
    case Family::I:
        return 2 * t.m;
    default:
        throw std::invalid_argument("affine type " + t.name() + " has infinite order");
    }
}

Integer finite_group_order(const SubdiagramClass& cls)
{
    if (cls.kind != SubdiagramKind::Elliptic)
        throw std::invalid_argument("group order requested for non-elliptic subdiagram");
    Integer order = 1;
    for (const auto& t : cls.components)
        order *= finite_group_order(t);
    return order;
}

SubdiagramCensus::SubdiagramCensus(const CoxeterDiagram& diagram)
{
    MaskClassifier mc(diagram);
    const std::size_t n = diagram.size();
    elliptic_.push_back({0, SubdiagramClass{}, 1});

    // Depth-first over the subset-closed family of sets with finite or
    // affine components.
    std::vector<std::pair<NodeMask, std::size_t>> stack{{0, 0}};
    while (!stack.empty()) {
        const auto [mask, next] = stack.back();
        stack.pop_back();
        for (std::size_t v = n; v-- > next;) {
            const NodeMask grown = mask | (NodeMask{1} << v);
            auto types = mc.types(grown);
            if (!types)
                continue;
            SubdiagramClass cls = class_from_types(types);
            if (cls.kind == SubdiagramKind::Elliptic) {
                Integer order = finite_group_order(cls);
                elliptic_.push_back({grown, std::move(cls), std::move(order)});
            } else if (cls.kind == SubdiagramKind::Parabolic) {
                parabolic_.push_back({grown, std::move(cls), 0});
            }
            stack.push_back({grown, v + 1});
        }
    }
    auto by_mask = [](const Entry& a, const Entry& b) { return a.mask < b.mask; };
    std::sort(elliptic_.begin(), elliptic_.end(), by_mask);
    std::sort(parabolic_.begin(), parabolic_.end(), by_mask);
}

bool finite_volume_check(const CoxeterDiagram& diagram, int n)
{
    if (diagram.size() == 0)
        return false;
    const SubdiagramCensus census(diagram);
    std::vector<NodeMask> vertices;
    std::vector<NodeMask> edges;
    for (const auto& e : census.elliptic()) {
        if (e.cls.rank == n)
            vertices.push_back(e.mask);
        else if (e.cls.rank == n - 1)
            edges.push_back(e.mask);
    }
    for (const auto& p : census.parabolic())
        if (p.cls.rank == n - 1)
            vertices.push_back(p.mask);
    if (vertices.empty())
        return false;
    for (NodeMask edge : edges) {
        int ends = 0;
        for (NodeMask v : vertices)
            if ((edge & ~v) == 0)
                ++ends;
        if (ends != 2)
            return false;
    }
    return true;
}

std::uint64_t diagram_automorphism_order(const CoxeterDiagram& d)
{
    const std::size_t n = d.size();
    auto same = [&](std::size_t i, std::size_t j, std::size_t pi, std::size_t pj) {
        if (d.has_gram_squares())
            return d.gram_squares()[i][j] == d.gram_squares()[pi][pj];
        return d.bond(i, j) == d.bond(pi, pj);
    };
    std::vector<std::size_t> image(n);
    std::vector<bool> used(n, false);
    std::uint64_t count = 0;

    auto extend = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            ++count;
            return;
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j] || d.norm(i) != d.norm(j))
                continue;
            bool ok = true;
            for (std::size_t k = 0; k < i && ok; ++k)
                ok = same(i, k, j, image[k]);
            if (!ok)
                continue;
            used[j] = true;
            image[i] = j;
            self(self, i + 1);
            used[j] = false;
        }
    };
    extend(extend, 0);
    return count;
}

std::string format_diagram(const CoxeterDiagram& d)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < d.size(); ++i)
        out << "node " << i << " norm=" << d.norm(i) << "\n";
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j)
            if (!d.bond(i, j).is_none())
                out << "bond " << i << " " << j << " " << d.bond(i, j).token() << "\n";
    return out.str();
}

CoxeterDiagram parse_diagram(std::istream& in)
{
    static const std::regex node_re(R"(\s*node\s+(\d+)\s+norm=([+-]?\d+)\s*)");
    static const std::regex bond_re(R"(\s*bond\s+(\d+)\s+(\d+)\s+(\S+)\s*)");
    std::map<std::size_t, Integer> norms;
    std::vector<std::tuple<std::size_t, std::size_t, BondLabel>> bonds;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        std::smatch m;
        if (std::regex_match(line, m, node_re)) {
            const std::size_t idx = std::stoul(m[1].str());
            if (!norms.emplace(idx, Integer(m[2].str())).second)
                throw FormatError("line " + std::to_string(lineno) + ": duplicate node");
        } else if (std::regex_match(line, m, bond_re)) {
            bonds.emplace_back(std::stoul(m[1].str()), std::stoul(m[2].str()), BondLabel::parse(m[3].str()));
        } else {
            throw FormatError("line " + std::to_string(lineno) + ": cannot parse '" + line + "'");
        }
    }
    std::vector<Integer> ordered;
    for (const auto& [idx, k] : norms) {
        if (idx != ordered.size())
            throw FormatError("node indices must be 0..n-1");
        ordered.push_back(k);
    }
    CoxeterDiagram d(std::move(ordered));
    for (const auto& [i, j, label] : bonds) {
        if (i >= d.size() || j >= d.size() || i == j)
            throw FormatError("bond " + std::to_string(i) + " " + std::to_string(j) + " has bad endpoints");
        d.set_bond(i, j, label);
    }
    return d;
}

CoxeterDiagram parse_diagram(const std::string& text)
{
    std::istringstream ss(text);
    return parse_diagram(ss);
}

std::string to_dot(const CoxeterDiagram& d, const std::string& name)
{
    std::ostringstream out;
    out << "graph " << name << " {\n";
    out << "  node [shape=circle];\n";
    for (std::size_t i = 0; i < d.size(); ++i)
        out << "  n" << i << " [label=\"" << i << "\", xlabel=\"" << d.norm(i) << "\"];\n";
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            const BondLabel& b = d.bond(i, j);
            if (b.is_none())
                continue;
            out << "  n" << i << " -- n" << j << " [";
            switch (b.kind) {
            case BondLabel::Kind::Finite:
                if (b.m == 3 || b.m == 4 || b.m == 6)
                    out << "label=\"" << (b.m == 3 ? 1 : b.m == 4 ? 2 : 3) << "\"";
                else
                    out << "label=\"m=" << b.m << "\"";
                break;
            case BondLabel::Kind::Heavy:
                out << "label=\"inf\", style=bold, penwidth=3";
                break;
            case BondLabel::Kind::Dashed:
                out << "label=\"" << to_string(b.weight) << "\", style=dashed";
                break;
            case BondLabel::Kind::None:
                break;
            }
            out << "];\n";
        }
    out << "}\n";
    return out.str();
}

}  // namespace hypcox::coxeter

#include "hypcox/report.hpp"

#include "hypcox/covolume.hpp"
#include "hypcox/coxeter.hpp"
#include "hypcox/eisenstein.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace hypcox::report {

using nlohmann::json;

OutputFormat parse_format(const std::string& name)
{
    if (name == "text")
        return OutputFormat::Text;
    if (name == "json" || name == "structured")
        return OutputFormat::Json;
    throw std::invalid_argument("unknown format '" + name + "' (expected text or json)");
}

const ComponentMetadata& component_metadata(int j)
{
    static const std::vector<ComponentMetadata> table{
        {"RP2 + 3 handles", 27, "S5"},
        {"RP2 + 2 handles", 15, "(S3 x S3) x| Z/2"},
        {"RP2 + 1 handle", 7, "(Dinf x Dinf) x| Z/2"},
        {"RP2", 3, std::nullopt},
        {"RP2 u S2", 3, std::nullopt},
    };
    if (j < 0 || j > 4)
        throw std::out_of_range("component index must be 0..4");
    return table[static_cast<std::size_t>(j)];
}

ComponentError::ComponentError(int j, const VinbergIncompleteError& cause)
    : VinbergIncompleteError("component j=" + std::to_string(j) + ": " + cause.what(), cause.partial()), j_(j)
{
}

QuadraticForm component_form(int j)
{
    if (j < 0 || j > 4)
        throw std::out_of_range("component index must be 0..4");
    IntVector d{-1, 1, 1, 1, 1};
    for (int i = 0; i < j; ++i)
        d[4 - static_cast<std::size_t>(i)] = 3;
    return QuadraticForm::diagonal(d);
}

namespace {

IntVector sorted_tail(IntVector d)
{
    std::sort(d.begin() + 1, d.end());
    return d;
}

}  // namespace

ComponentReport analyze_form(const QuadraticForm& form, const VinbergLimits& limits, int precision)
{
    const int n = static_cast<int>(form.dim()) - 1;
    const VinbergState state = run_vinberg(form, default_controlling_vector(form), limits);
    const auto diagram = coxeter::build_diagram(state.roots(), form);

    ComponentReport r;
    r.form = form.diagonal_entries();
    r.facet_count = state.accepted.size();
    for (const auto& a : state.accepted)
        r.roots.push_back({a.root.vector, a.root.norm, a.height});
    r.diagram = coxeter::format_diagram(diagram);
    r.chi_w = covolume::orbifold_euler_characteristic(diagram);
    r.automorphism_order = coxeter::diagram_automorphism_order(diagram);
    r.chi_pgamma = covolume::quotient_invariants(r.chi_w, static_cast<std::int64_t>(r.automorphism_order));
    const auto inv = covolume::hyperbolic_volume(r.chi_pgamma, n);
    r.volume_coefficient = inv.volume_coefficient;
    r.volume_numeric = inv.volume_fixed(precision);
    return r;
}

TableReport table(const RunConfig& config)
{
    TableReport out;
    out.precision = config.precision;
    const auto chis = eisenstein::anti_involution_classes();
    for (int j = 0; j <= 4; ++j) {
        const QuadraticForm form = component_form(j);
        const QuadraticForm fixed = eisenstein::fixed_lattice_form(chis[static_cast<std::size_t>(j)]);
        if (!fixed.is_diagonal() || sorted_tail(fixed.diagonal_entries()) != sorted_tail(form.diagonal_entries()))
            throw std::logic_error("fixed lattice of chi_" + std::to_string(j) + " does not match its form");
        ComponentReport row;
        try {
            row = analyze_form(form, config.limits, config.precision);
        } catch (const VinbergIncompleteError& e) {
            throw ComponentError(j, e);
        }
        row.j = j;
        row.metadata = component_metadata(j);
        out.totals.chi += row.chi_pgamma;
        out.rows.push_back(std::move(row));
    }
    out.totals.chi.canonicalize();
    for (auto& row : out.rows) {
        row.fraction = row.chi_pgamma / out.totals.chi;
        row.fraction.canonicalize();
        row.percentage = decimal_string(Rational(100 * row.fraction), 2);
    }
    out.totals.volume_coefficient = Rational(4, 3) * out.totals.chi;
    out.totals.volume_coefficient.canonicalize();
    out.totals.volume_numeric = covolume::pi_multiple_fixed(out.totals.volume_coefficient, 2, config.precision);
    out.totals.percentage = decimal_string(Rational(100), 2);
    return out;
}

// ---------------------------------------------------------------------------

namespace {

std::string csv(const IntVector& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + v[i].get_str();
    return s;
}

std::string render_text_table(const std::vector<std::vector<std::string>>& cells)
{
    std::vector<std::size_t> width;
    for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (width.size() <= c)
                width.push_back(0);
            width[c] = std::max(width[c], row[c].size());
        }
    std::ostringstream out;
    for (const auto& row : cells) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size())
                line += std::string(width[c] - row[c].size() + 2, ' ');
        }
        out << line << "\n";
    }
    return out.str();
}

json strings(const IntVector& v)
{
    json a = json::array();
    for (const auto& c : v)
        a.push_back(c.get_str());
    return a;
}

IntVector integers(const json& a)
{
    IntVector v;
    for (const auto& c : a)
        v.emplace_back(c.get<std::string>());
    return v;
}

json roots_json(const std::vector<ReportRoot>& roots)
{
    json a = json::array();
    for (const auto& r : roots)
        a.push_back({{"vector", strings(r.vector)}, {"norm", r.norm.get_str()}, {"height", to_string(r.height)}});
    return a;
}

}  // namespace

std::string serialize(const TableReport& report, OutputFormat format)
{
    if (format == OutputFormat::Text) {
        std::vector<std::vector<std::string>> cells{{"j", "form", "facets", "chi(W)", "|Aut|", "chi(PGamma)",
                                                     "volume", "fraction", "topology", "real lines", "pi1orb"}};
        for (const auto& r : report.rows)
            cells.push_back({std::to_string(r.j), csv(r.form), std::to_string(r.facet_count), to_string(r.chi_w),
                             std::to_string(r.automorphism_order), to_string(r.chi_pgamma), r.volume_numeric,
                             r.percentage + "%", r.metadata.topology, std::to_string(r.metadata.real_lines),
                             r.metadata.orbifold_group.value_or("-")});
        std::ostringstream out;
        out << render_text_table(cells);
        out << "total  " << to_string(report.totals.chi) << "  " << report.totals.volume_numeric << "  "
            << report.totals.percentage << "%\n";
        for (const auto& r : report.rows)
            out << "\n# diagram j=" << r.j << "\n" << r.diagram;
        return out.str();
    }

    json rows = json::array();
    for (const auto& r : report.rows) {
        json m{{"topology", r.metadata.topology}, {"real_lines", r.metadata.real_lines}};
        m["orbifold_fundamental_group"] = r.metadata.orbifold_group ? json(*r.metadata.orbifold_group) : json(nullptr);
        rows.push_back({{"j", r.j},
                        {"form", strings(r.form)},
                        {"facet_count", r.facet_count},
                        {"roots", roots_json(r.roots)},
                        {"diagram", r.diagram},
                        {"chi_W", to_string(r.chi_w)},
                        {"automorphism_order", r.automorphism_order},
                        {"chi_PGamma", to_string(r.chi_pgamma)},
                        {"volume_coefficient", to_string(r.volume_coefficient)},
                        {"volume_numeric", r.volume_numeric},
                        {"fraction", to_string(r.fraction)},
                        {"percentage", r.percentage},
                        {"metadata", m}});
    }
    json doc{{"precision", report.precision},
             {"components", rows},
             {"totals",
              {{"chi", to_string(report.totals.chi)},
               {"volume_coefficient", to_string(report.totals.volume_coefficient)},
               {"volume_numeric", report.totals.volume_numeric},
               {"percentage", report.totals.percentage}}}};
    return doc.dump(2) + "\n";
}

TableReport parse_table_json(const std::string& text)
{
    TableReport out;
    try {
        const json doc = json::parse(text);
        out.precision = doc.at("precision").get<int>();
        for (const auto& r : doc.at("components")) {
            ComponentReport c;
            c.j = r.at("j").get<int>();
            c.form = integers(r.at("form"));
            c.facet_count = r.at("facet_count").get<std::size_t>();
            for (const auto& root : r.at("roots"))
                c.roots.push_back({integers(root.at("vector")), Integer(root.at("norm").get<std::string>()),
                                   parse_rational(root.at("height").get<std::string>())});
            c.diagram = r.at("diagram").get<std::string>();
            c.chi_w = parse_rational(r.at("chi_W").get<std::string>());
            c.automorphism_order = r.at("automorphism_order").get<std::uint64_t>();
            c.chi_pgamma = parse_rational(r.at("chi_PGamma").get<std::string>());
            c.volume_coefficient = parse_rational(r.at("volume_coefficient").get<std::string>());
            c.volume_numeric = r.at("volume_numeric").get<std::string>();
            c.fraction = parse_rational(r.at("fraction").get<std::string>());
            c.percentage = r.at("percentage").get<std::string>();
            const json& m = r.at("metadata");
            c.metadata.topology = m.at("topology").get<std::string>();
            c.metadata.real_lines = m.at("real_lines").get<int>();
            if (!m.at("orbifold_fundamental_group").is_null())
                c.metadata.orbifold_group = m.at("orbifold_fundamental_group").get<std::string>();
            out.rows.push_back(std::move(c));
        }
        const json& t = doc.at("totals");
        out.totals.chi = parse_rational(t.at("chi").get<std::string>());
        out.totals.volume_coefficient = parse_rational(t.at("volume_coefficient").get<std::string>());
        out.totals.volume_numeric = t.at("volume_numeric").get<std::string>();
        out.totals.percentage = t.at("percentage").get<std::string>();
    } catch (const json::exception& e) {
        throw FormatError(std::string("malformed table report: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("malformed table report: ") + e.what());
    }
    return out;
}

std::string serialize_vinberg(const VinbergState& state, OutputFormat format)
{
    const auto diagram = coxeter::build_diagram(state.roots(), state.form);
    if (format == OutputFormat::Text) {
        std::ostringstream out;
        for (const auto& a : state.accepted)
            out << "root " << csv(a.root.vector) << " norm=" << a.root.norm << " height=" << to_string(a.height)
                << "\n";
        out << coxeter::format_diagram(diagram);
        return out.str();
    }
    json roots = json::array();
    for (const auto& a : state.accepted)
        roots.push_back({{"vector", strings(a.root.vector)},
                         {"norm", a.root.norm.get_str()},
                         {"height", to_string(a.height)}});
    json doc{{"form", strings(state.form.diagonal_entries())},
             {"controlling_vector", strings(state.v0)},
             {"complete", state.complete},
             {"roots", roots},
             {"diagram", coxeter::format_diagram(diagram)}};
    if (!state.form.is_diagonal()) {
        json gram = json::array();
        for (const auto& row : state.form.gram())
            gram.push_back(strings(row));
        doc["gram"] = gram;
    }
    return doc.dump(2) + "\n";
}

}  // namespace hypcox::report

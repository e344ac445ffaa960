#pragma once

// Reproduction of the moduli table for the five real forms
// -x0^2 + m1 x1^2 + ... + m4 x4^2 (j of the m_i equal to 3), and the report
// formats shared by the command line tool.

#include "hypcox/arith.hpp"
#include "hypcox/forms.hpp"
#include "hypcox/vinberg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hypcox::report {

enum class OutputFormat { Text, Json };

/// "text", or "json" / "structured"; throws std::invalid_argument otherwise.
OutputFormat parse_format(const std::string& name);

struct RunConfig {
    VinbergLimits limits;
    OutputFormat format = OutputFormat::Text;
    int precision = 5;  // decimals for volumes
    std::optional<QuadraticForm> form_override;
};

/// Static description of the real cubic surfaces of each type.
struct ComponentMetadata {
    std::string topology;
    int real_lines = 0;
    std::optional<std::string> orbifold_group;

    friend bool operator==(const ComponentMetadata&, const ComponentMetadata&) = default;
};

const ComponentMetadata& component_metadata(int j);

struct ReportRoot {
    IntVector vector;
    Integer norm;
    Rational height;

    friend bool operator==(const ReportRoot&, const ReportRoot&) = default;
};

struct ComponentReport {
    int j = 0;
    IntVector form;  // diagonal entries
    std::size_t facet_count = 0;
    std::vector<ReportRoot> roots;
    std::string diagram;  // coxeter text format
    Rational chi_w;
    std::uint64_t automorphism_order = 1;
    Rational chi_pgamma;
    Rational volume_coefficient;  // of pi^2
    std::string volume_numeric;
    Rational fraction;       // of the total Euler characteristic
    std::string percentage;  // two decimals
    ComponentMetadata metadata;

    friend bool operator==(const ComponentReport&, const ComponentReport&) = default;
};

struct TableTotals {
    Rational chi;
    Rational volume_coefficient;
    std::string volume_numeric;
    std::string percentage;

    friend bool operator==(const TableTotals&, const TableTotals&) = default;
};

struct TableReport {
    int precision = 5;
    std::vector<ComponentReport> rows;
    TableTotals totals;

    friend bool operator==(const TableReport&, const TableReport&) = default;
};

/// Thrown when one of the five pipelines stops before finishing.
class ComponentError : public VinbergIncompleteError {
public:
    ComponentError(int j, const VinbergIncompleteError& cause);
    int component() const { return j_; }

private:
    int j_;
};

/// diag(-1, 1, ..., 3, 3) with j trailing threes.
QuadraticForm component_form(int j);

/// Everything derived from a single reflective form in dimension 4.
ComponentReport analyze_form(const QuadraticForm& form, const VinbergLimits& limits, int precision);

TableReport table(const RunConfig& config);

std::string serialize(const TableReport& report, OutputFormat format);
TableReport parse_table_json(const std::string& text);

/// Accepted roots (coordinates, norm, height) and the resulting diagram.
std::string serialize_vinberg(const VinbergState& state, OutputFormat format);

}  // namespace hypcox::report

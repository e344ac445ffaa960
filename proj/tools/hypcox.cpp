// hypcox: Vinberg's algorithm, Coxeter covolumes and the real cubic surface
// moduli table from the command line.

#include "hypcox/covolume.hpp"
#include "hypcox/coxeter.hpp"
#include "hypcox/eisenstein.hpp"
#include "hypcox/forms.hpp"
#include "hypcox/report.hpp"
#include "hypcox/vinberg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace hypcox;

enum ExitCode : int {
    kOk = 0,
    kError = 1,
    kUsage = 2,
    kLimit = 3,
    kCriterion = 4,
    kIo = 5,
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CriterionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string diag;
    std::string form_file;
    std::string diagram_file;
    std::string quad_diag;
    int dim = 4;
    long max_height = 100;
    std::size_t max_roots = 50;
    std::string format = "text";
    int precision = 5;
    std::string out;
};

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const Options& opt, const std::string& text)
{
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opt.out);
    if (!f || !(f << text))
        throw IoError("cannot write '" + opt.out + "'");
}

QuadraticForm input_form(const Options& opt)
{
    if (!opt.diag.empty() && !opt.form_file.empty())
        throw CLI::ValidationError("--diag and --form are mutually exclusive");
    if (!opt.diag.empty())
        return parse_diag_csv(opt.diag);
    if (!opt.form_file.empty())
        return parse_form(slurp(opt.form_file));
    throw CLI::ValidationError("a form is required (--diag or --form)");
}

report::RunConfig config_of(const Options& opt)
{
    if (opt.max_height <= 0)
        throw CLI::ValidationError("--max-height must be positive");
    if (opt.precision < 0 || opt.precision > 30)
        throw CLI::ValidationError("--precision must lie in 0..30");
    report::RunConfig cfg;
    cfg.limits.max_height = opt.max_height;
    cfg.limits.max_roots = opt.max_roots;
    try {
        cfg.format = report::parse_format(opt.format);
    } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError(e.what());
    }
    cfg.precision = opt.precision;
    return cfg;
}

void add_limits(CLI::App* cmd, Options& opt)
{
    cmd->add_option("--max-height", opt.max_height, "Largest root height scanned")->capture_default_str();
    cmd->add_option("--max-roots", opt.max_roots, "Largest number of accepted roots")->capture_default_str();
}

void add_output(CLI::App* cmd, Options& opt)
{
    cmd->add_option("--format", opt.format, "text or json")->capture_default_str();
    cmd->add_option("--out", opt.out, "Write to this file instead of stdout");
}

void add_form(CLI::App* cmd, Options& opt)
{
    cmd->add_option("--diag", opt.diag, "Diagonal Gram entries, e.g. -1,3,3,1,1");
    cmd->add_option("--form", opt.form_file, "Form file ('dim n' then 'diag ...' or Gram rows)");
}

void run_table(const Options& opt)
{
    const auto cfg = config_of(opt);
    emit(opt, report::serialize(report::table(cfg), cfg.format));
}

void run_vinberg_cmd(const Options& opt)
{
    const auto cfg = config_of(opt);
    const QuadraticForm form = input_form(opt);
    const auto state = run_vinberg(form, default_controlling_vector(form), cfg.limits);
    emit(opt, report::serialize_vinberg(state, cfg.format));
}

std::string euler_of_diagram(const Options& opt, report::OutputFormat fmt)
{
    const auto diagram = coxeter::parse_diagram(slurp(opt.diagram_file));
    if (!coxeter::finite_volume_check(diagram, opt.dim))
        throw CriterionError("diagram fails the finite-volume criterion in dimension " + std::to_string(opt.dim));
    const Rational chi = covolume::orbifold_euler_characteristic(diagram);
    const auto aut = coxeter::diagram_automorphism_order(diagram);
    const auto inv = covolume::hyperbolic_volume(chi, opt.dim);
    const std::string pi = opt.dim == 4 ? "pi^2" : "pi";
    if (fmt == report::OutputFormat::Json) {
        nlohmann::json doc{{"dimension", opt.dim},
                           {"chi_W", to_string(chi)},
                           {"automorphism_order", aut},
                           {"volume_coefficient", to_string(inv.volume_coefficient)},
                           {"volume_numeric", inv.volume_fixed(opt.precision)}};
        return doc.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "chi(W) = " << to_string(chi) << "\n"
        << "diagram automorphisms = " << aut << "\n"
        << "volume(W) = " << to_string(inv.volume_coefficient) << " " << pi << " = "
        << inv.volume_fixed(opt.precision) << "\n";
    return out.str();
}

void run_euler(const Options& opt)
{
    const auto cfg = config_of(opt);
    if (!opt.diagram_file.empty()) {
        emit(opt, euler_of_diagram(opt, cfg.format));
        return;
    }
    const QuadraticForm form = input_form(opt);
    const auto r = report::analyze_form(form, cfg.limits, cfg.precision);
    const std::string pi = form.dim() == 5 ? "pi^2" : "pi";
    if (cfg.format == report::OutputFormat::Json) {
        nlohmann::json doc{{"facet_count", r.facet_count},
                           {"chi_W", to_string(r.chi_w)},
                           {"automorphism_order", r.automorphism_order},
                           {"chi_PGamma", to_string(r.chi_pgamma)},
                           {"volume_coefficient", to_string(r.volume_coefficient)},
                           {"volume_numeric", r.volume_numeric}};
        emit(opt, doc.dump(2) + "\n");
        return;
    }
    std::ostringstream out;
    out << "facets = " << r.facet_count << "\n"
        << "chi(W) = " << to_string(r.chi_w) << "\n"
        << "diagram automorphisms = " << r.automorphism_order << "\n"
        << "chi(PGamma) = " << to_string(r.chi_pgamma) << "\n"
        << "volume = " << to_string(r.volume_coefficient) << " " << pi << " = " << r.volume_numeric << "\n";
    emit(opt, out.str());
}

void run_fixed_lattice(const Options& opt)
{
    std::ostringstream out;
    int j = 0;
    for (const auto& chi : eisenstein::anti_involution_classes()) {
        out << "# chi_" << j++ << " = " << chi.describe() << "\n";
        out << format_form(eisenstein::fixed_lattice_form(chi)) << "\n";
    }
    emit(opt, out.str());
}

void run_galois(const Options& opt)
{
    const auto cfg = config_of(opt);
    QuadRingForm form = [&] {
        if (!opt.quad_diag.empty()) {
            std::vector<QuadRingElement> entries;
            std::stringstream ss(opt.quad_diag);
            std::string item;
            while (std::getline(ss, item, ','))
                entries.push_back(parse_quad_ring(item));
            return QuadRingForm::diagonal(entries);
        }
        if (!opt.form_file.empty())
            return parse_quad_ring_form(slurp(opt.form_file));
        throw CLI::ValidationError("a form is required (--diag or --form)");
    }();
    const auto [plus, minus] = conjugate_signature_pair(form);
    const bool witness = form.dim() == 5 && nonarithmeticity_witness(form);
    std::ostringstream sp, sm;
    sp << plus;
    sm << minus;
    if (cfg.format == report::OutputFormat::Json) {
        nlohmann::json doc{{"signature", sp.str()}, {"conjugate_signature", sm.str()}, {"witness", witness}};
        emit(opt, doc.dump(2) + "\n");
        return;
    }
    emit(opt, "signature = " + sp.str() + "\nconjugate signature = " + sm.str() +
                  "\nnonarithmeticity witness = " + (witness ? "true" : "false") + "\n");
}

void run_export(const Options& opt)
{
    const auto cfg = config_of(opt);
    if (!opt.diagram_file.empty()) {
        emit(opt, coxeter::to_dot(coxeter::parse_diagram(slurp(opt.diagram_file))));
        return;
    }
    const QuadraticForm form = input_form(opt);
    const auto state = run_vinberg(form, default_controlling_vector(form), cfg.limits);
    emit(opt, coxeter::to_dot(coxeter::build_diagram(state.roots(), form)));
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Vinberg's algorithm and covolumes of hyperbolic reflection groups"};
    app.require_subcommand(1);
    Options opt;

    auto* table = app.add_subcommand("table", "Reproduce the five-component moduli table");
    add_limits(table, opt);
    add_output(table, opt);
    table->add_option("--precision", opt.precision, "Decimals for volumes")->capture_default_str();

    auto* vinberg = app.add_subcommand("vinberg", "Run Vinberg's algorithm on a form");
    add_form(vinberg, opt);
    add_limits(vinberg, opt);
    add_output(vinberg, opt);

    auto* euler = app.add_subcommand("euler", "Euler characteristic and volume of a form or diagram");
    add_form(euler, opt);
    euler->add_option("--diagram", opt.diagram_file, "Diagram file instead of a form");
    euler->add_option("--dim", opt.dim, "Hyperbolic dimension for --diagram (2 or 4)")->capture_default_str();
    add_limits(euler, opt);
    add_output(euler, opt);
    euler->add_option("--precision", opt.precision, "Decimals for volumes")->capture_default_str();

    auto* fixed = app.add_subcommand("fixed-lattice", "Fixed lattices of the five anti-involutions");
    fixed->add_option("--out", opt.out, "Write to this file instead of stdout");

    auto* galois = app.add_subcommand("galois", "Signatures of a Z[sqrt3] form and its Galois conjugate");
    galois->add_option("--diag", opt.quad_diag, "Diagonal entries such as -1,0+1*r3,1,1,1");
    galois->add_option("--form", opt.form_file, "Form file with a+b*r3 entries");
    add_output(galois, opt);

    auto* dexport = app.add_subcommand("diagram-export", "Graphviz export of a Coxeter diagram");
    add_form(dexport, opt);
    dexport->add_option("--diagram", opt.diagram_file, "Diagram file instead of a form");
    add_limits(dexport, opt);
    dexport->add_option("--out", opt.out, "Write to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*table)
            run_table(opt);
        else if (*vinberg)
            run_vinberg_cmd(opt);
        else if (*euler)
            run_euler(opt);
        else if (*fixed)
            run_fixed_lattice(opt);
        else if (*galois)
            run_galois(opt);
        else if (*dexport)
            run_export(opt);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const VinbergIncompleteError& e) {
        std::cerr << "enumeration limit: " << e.what() << "\n";
        return kLimit;
    } catch (const CriterionError& e) {
        std::cerr << "criterion failure: " << e.what() << "\n";
        return kCriterion;
    } catch (const coxeter::CrystallographyError& e) {
        std::cerr << "criterion failure: " << e.what() << "\n";
        return kCriterion;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kIo;
    } catch (const FormatError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    return kOk;
}

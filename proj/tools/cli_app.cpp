#include "cli_app.hpp"

#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "coefficient_file.hpp"
#include "lanczos/lanczos.hpp"

namespace lanczos::cli {
namespace {

constexpr double xcheck_tolerance = 1e-7;

class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string fmt(const char* format, double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, format, v);
    return buf;
}

std::string g17(double v) { return fmt("%.17g", v); }

std::string complex15(std::complex<double> w) {
    return fmt("%.15g", w.real()) + (std::signbit(w.imag()) ? " - " : " + ") + fmt("%.15g", std::abs(w.imag())) + "i";
}

// --r-re / --r-im / --r-im-pi, shared by gen, eval and xcheck.
struct r_options {
    double re = 1.0;
    double im = 0.0;
    CLI::Option* im_opt = nullptr;
    CLI::Option* im_pi_opt = nullptr;
    double im_pi = 0.0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--r-re", re, "real part of the free parameter r");
        im_opt = cmd->add_option("--r-im", im, "imaginary part of r");
        im_pi_opt = cmd->add_option("--r-im-pi", im_pi, "imaginary part of r as a multiple of pi");
        im_opt->excludes(im_pi_opt);
    }

    free_parameter value() const {
        const double imag = im_pi_opt->count() > 0 ? im_pi * std::numbers::pi : im;
        try {
            return {re, imag};
        } catch (const parameter_error& e) {
            throw usage_error(e.what());
        }
    }
};

void check_terms(int n) {
    if (n < 1 || n > max_terms) throw usage_error("--n must be in [1, " + std::to_string(max_terms) + "]");
}

int cmd_gen(const r_options& ro, int n, const std::string& out_path, std::ostream& out) {
    check_terms(n);
    const auto r = ro.value();
    const auto set = generate(r, n);
    out << "# r = " << g17(r.real()) << " " << g17(r.imag()) << "i, n_terms = " << n << '\n';
    out << "k re im\n";
    for (int k = 0; k < set.size(); ++k) out << k << ' ' << g17(set[k].real()) << ' ' << g17(set[k].imag()) << '\n';
    if (!out_path.empty()) write_coefficient_file(out_path, set);
    return exit_ok;
}

int cmd_eval(const r_options& ro, int n, const std::string& coeff_path, double z_re, double z_im, std::ostream& out) {
    std::optional<coefficient_set> set;
    if (!coeff_path.empty()) {
        try {
            set = read_coefficient_file(coeff_path);
        } catch (const file_error& e) {
            throw usage_error(e.what());
        }
    } else {
        check_terms(n);
        set = generate(ro.value(), n);
    }
    const std::complex<double> z(z_re, z_im);
    const auto gz = gamma(z, *set);
    const auto gzp1 = gamma(z + 1.0, *set);
    out << "z = " << complex15(z) << '\n';
    out << "gamma(z) = " << complex15(gz) << '\n';
    out << "gamma(z+1) = " << complex15(gzp1) << '\n';
    return exit_ok;
}

int cmd_sweep(const std::string& preset, int n, const std::string& out_path, std::ostream& out) {
    check_terms(n);
    std::vector<harness::error_record> records;
    const auto family = harness::default_r_family();
    if (preset == "real-axis")
        records = harness::sweep_real_axis(family, n);
    else if (preset == "complex-z")
        records = harness::sweep_complex_z(family, n);
    else if (preset == "r1-20pi")
        records = harness::sweep_r1_20pi(n);
    else
        throw usage_error("unknown preset " + preset);

    if (out_path.empty()) {
        harness::write_sweep_csv(out, records);
    } else {
        std::ofstream os(out_path);
        if (!os) throw usage_error("cannot open " + out_path);
        harness::write_sweep_csv(os, records);
        out << "wrote " << records.size() << " rows to " << out_path << '\n';
    }
    return exit_ok;
}

int cmd_special(double r_x, double y_max, std::ostream& out) {
    if (!(r_x > -0.5)) throw usage_error("--rx must exceed -1/2");
    if (!(y_max > 0)) throw usage_error("--ymax must be positive");
    const auto points = geometry::find_special_points(r_x, y_max);
    out << "r_y kind condition_residual a0_cross_part\n";
    for (const auto& p : points)
        out << g17(p.r_y_root) << ' ' << geometry::to_string(p.kind) << ' ' << g17(p.condition_residual) << ' '
            << g17(p.a0_cross_part) << '\n';
    return exit_ok;
}

int cmd_xcheck(const r_options& ro, int k_max, std::ostream& out) {
    if (k_max < 0 || k_max > transform::max_quadrature_index)
        throw usage_error("--kmax must be in [0, " + std::to_string(transform::max_quadrature_index) + "]");
    const auto r = ro.value();
    const auto set = generate(r, k_max + 1);
    bool ok = true;
    out << "k recursion_re recursion_im quadrature_re quadrature_im abs_diff\n";
    for (int k = 0; k <= k_max; ++k) {
        try {
            const auto q = transform::a_k_by_quadrature(k, r);
            const double diff = std::abs(q - set[k]);
            if (!(diff <= xcheck_tolerance)) ok = false;
            out << k << ' ' << g17(set[k].real()) << ' ' << g17(set[k].imag()) << ' ' << g17(q.real()) << ' '
                << g17(q.imag()) << ' ' << g17(diff) << '\n';
        } catch (const quadrature_error& e) {
            ok = false;
            out << k << ' ' << g17(set[k].real()) << ' ' << g17(set[k].imag()) << " quadrature-failed "
                << complex15(e.last_estimate()) << " / " << complex15(e.previous_estimate()) << '\n';
        }
    }
    return ok ? exit_ok : exit_xcheck_failed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Lanczos gamma approximation with a complex free parameter"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "generate a coefficient set");
    r_options gen_r;
    gen_r.attach(gen);
    int gen_n = 10;
    std::string gen_out;
    gen->add_option("--n", gen_n, "number of coefficients (1..40)")->required();
    gen->add_option("--out", gen_out, "write the set to this JSON file");

    auto* ev = app.add_subcommand("eval", "evaluate Gamma(z) and Gamma(z+1)");
    r_options ev_r;
    ev_r.attach(ev);
    int ev_n = 10;
    std::string ev_coeffs;
    double z_re = 0, z_im = 0;
    auto* coeffs_opt = ev->add_option("--coeffs", ev_coeffs, "coefficient JSON file");
    ev->add_option("--n", ev_n, "number of coefficients for inline generation")->excludes(coeffs_opt);
    ev->add_option("--z-re", z_re, "real part of z")->required();
    ev->add_option("--z-im", z_im, "imaginary part of z");

    auto* sw = app.add_subcommand("sweep", "run an error sweep and emit CSV");
    std::string preset;
    int sw_n = harness::default_terms;
    std::string sw_out;
    sw->add_option("preset", preset, "real-axis | complex-z | r1-20pi")
        ->required()
        ->check(CLI::IsMember({"real-axis", "complex-z", "r1-20pi"}));
    sw->add_option("--n", sw_n, "number of coefficients");
    sw->add_option("--out", sw_out, "CSV output file (default: stdout)");

    auto* sp = app.add_subcommand("special", "find r where a_0(r) is purely real or imaginary");
    double r_x = 1.0, y_max = 2 * std::numbers::pi;
    sp->add_option("--rx", r_x, "real part of r");
    sp->add_option("--ymax", y_max, "upper end of the r_y scan");

    auto* xc = app.add_subcommand("xcheck", "compare recursion and quadrature coefficients");
    r_options xc_r;
    xc_r.attach(xc);
    int k_max = 9;
    xc->add_option("--kmax", k_max, "largest coefficient index (0..20)");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (*gen) return cmd_gen(gen_r, gen_n, gen_out, out);
        if (*ev) return cmd_eval(ev_r, ev_n, ev_coeffs, z_re, z_im, out);
        if (*sw) return cmd_sweep(preset, sw_n, sw_out, out);
        if (*sp) return cmd_special(r_x, y_max, out);
        if (*xc) return cmd_xcheck(xc_r, k_max, out);
    } catch (const usage_error& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const lanczos::error& e) {
        err << "numeric error: " << e.what() << '\n';
        return exit_numeric;
    }
    return exit_usage;
}

}  // namespace lanczos::cli

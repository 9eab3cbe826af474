#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hypspec/errors.hpp"
#include "hypspec/kernels.hpp"
#include "hypspec/report.hpp"
#include "hypspec/rmt.hpp"
#include "hypspec/spectrum_io.hpp"
#include "hypspec/trace_stats.hpp"

namespace {

using namespace hypspec;

bool g_quiet = false;

void info(const std::string& msg) {
    if (!g_quiet) std::cerr << msg << '\n';
}

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

struct Range {
    double lo = 0, step = 0, hi = 0;
    bool set = false;
};

Range parse_range(const std::string& text) {
    Range r;
    if (text.empty()) return r;
    std::istringstream ss(text);
    std::string a, b, c;
    if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') ||
        !std::getline(ss, c, ':'))
        throw ConfigError("range must be lo:step:hi, got: " + text);
    r.lo = std::stod(a);
    r.step = std::stod(b);
    r.hi = std::stod(c);
    if (r.step <= 0 || r.hi < r.lo) throw ConfigError("bad range: " + text);
    r.set = true;
    return r;
}

GeneratorSet resolve_gens(const std::string& spec) { return load_generators(spec); }

TestFunction make_family(const std::string& family, double A) {
    if (family == "bump") return TestFunction::bump(A);
    if (family == "fejer") return TestFunction::fejer(A);
    throw ConfigError("unknown test-function family: " + family);
}

int run_cli(int argc, char** argv) {
    CLI::App app{"hypspec: length spectra, twisted trace formulas and flux-averaged "
                 "spectral statistics on a fixed hyperbolic surface"};
    app.require_subcommand(1);
    bool g_json = false;
    app.add_flag("--quiet", g_quiet, "suppress informational output");
    app.add_flag("--json", g_json,
                 "machine-readable output where a text report is the default");

    // ---- enumerate ----
    auto* cmd_enum = app.add_subcommand("enumerate", "enumerate the primitive length spectrum");
    std::string en_gens = "bolza", en_out;
    double en_lmax = 6.0;
    int en_workers = 0;
    bool en_check = false;
    cmd_enum->add_option("--gens", en_gens, "generator set label or config path");
    cmd_enum->add_option("--lmax", en_lmax, "length cutoff")->required();
    cmd_enum->add_option("--out", en_out, "cache file path")->required();
    cmd_enum->add_option("--workers", en_workers, "worker threads (0 = auto)");
    cmd_enum->add_flag("--check", en_check, "re-read and validate the written cache");

    // ---- validate ----
    auto* cmd_val = app.add_subcommand("validate", "validate a generator set");
    std::string val_gens = "bolza";
    cmd_val->add_option("--gens", val_gens, "generator set label or config path");

    // ---- ifq ----
    auto* cmd_ifq = app.add_subcommand("ifq", "the correction integral I_{f,q}(L,tau)");
    double ifq_A = 1.0, ifq_L = 6.0, ifq_tau = 1.0;
    std::string ifq_q = "1", ifq_family = "bump";
    cmd_ifq->add_option("--A", ifq_A, "support radius of fhat");
    cmd_ifq->add_option("--L", ifq_L, "window resolution L");
    cmd_ifq->add_option("--tau", ifq_tau, "window center tau");
    cmd_ifq->add_option("--q", ifq_q, "flux denominator (int or 'inf')");
    cmd_ifq->add_option("--family", ifq_family,
                        "bump|fejer (fejer is a cross-check family; its "
                        "transform is not smooth at the support edge)");

    // ---- density ----
    auto* cmd_den = app.add_subcommand("density", "RMT number-variance density");
    std::string den_kind = "gue", den_family = "bump";
    double den_A = 1.0;
    cmd_den->add_option("--kind", den_kind, "goe|gue|gse");
    cmd_den->add_option("--A", den_A, "support radius of fhat");
    cmd_den->add_option("--family", den_family, "bump|fejer");

    // ---- variance ----
    auto* cmd_var = app.add_subcommand("variance", "exact and MC flux-averaged moments");
    std::string var_spec, var_q = "inf", var_op = "laplace", var_out, var_gens = "bolza";
    double var_A = 1.0, var_L = 6.0, var_tau = 1.0;
    std::int64_t var_samples = 10000;
    std::uint64_t var_seed = 1;
    int var_workers = 0;
    bool var_csv = false;
    cmd_var->add_option("--spectrum", var_spec, "spectrum cache path")->required();
    cmd_var->add_option("--gens", var_gens, "generator set label or config path");
    cmd_var->add_option("--q", var_q, "flux denominator (int or 'inf')");
    cmd_var->add_option("--A", var_A, "support radius");
    cmd_var->add_option("--L", var_L, "window resolution");
    cmd_var->add_option("--tau", var_tau, "window center");
    cmd_var->add_option("--op", var_op, "laplace|dirac");
    cmd_var->add_option("--samples", var_samples, "MC draws");
    cmd_var->add_option("--seed", var_seed, "RNG seed")->required();
    cmd_var->add_option("--out", var_out, "write JSON report here");
    cmd_var->add_option("--workers", var_workers, "worker threads (0 = auto)");
    cmd_var->add_flag("--csv", var_csv, "print a CSV row instead of JSON");

    // ---- rmt ----
    auto* cmd_rmt = app.add_subcommand("rmt", "Monte-Carlo random-matrix number variance");
    std::string rmt_kind = "gue";
    int rmt_n = 512, rmt_reps = 2000, rmt_workers = 0;
    double rmt_A = 1.0, rmt_W = 32.0, rmt_center = 0.0;
    std::uint64_t rmt_seed = 1;
    bool rmt_dense = false;
    cmd_rmt->add_option("--kind", rmt_kind, "goe|gue|gse");
    cmd_rmt->add_option("--n", rmt_n, "matrix dimension");
    cmd_rmt->add_option("--reps", rmt_reps, "replicas");
    cmd_rmt->add_option("--A", rmt_A, "support radius of fhat");
    cmd_rmt->add_option("--W", rmt_W, "window width in mean spacings");
    cmd_rmt->add_option("--center", rmt_center, "window center in (-1,1)");
    cmd_rmt->add_option("--seed", rmt_seed, "RNG seed")->required();
    cmd_rmt->add_option("--workers", rmt_workers, "worker threads (0 = auto)");
    cmd_rmt->add_flag("--dense", rmt_dense, "use dense samplers (cross-check)");

    // ---- scan ----
    auto* cmd_scan = app.add_subcommand("scan", "sweep L or tau, one CSV row per point");
    std::string scan_spec, scan_q = "inf", scan_op = "laplace", scan_out,
                scan_gens = "bolza", scan_L = "", scan_tau = "";
    double scan_A = 1.0, scan_L_fixed = 6.0, scan_tau_fixed = 1.0;
    std::int64_t scan_samples = 2000;
    std::uint64_t scan_seed = 1;
    int scan_workers = 0;
    cmd_scan->add_option("--spectrum", scan_spec, "spectrum cache path")->required();
    cmd_scan->add_option("--gens", scan_gens, "generator set label or config path");
    cmd_scan->add_option("--q", scan_q, "flux denominator");
    cmd_scan->add_option("--A", scan_A, "support radius");
    cmd_scan->add_option("--L", scan_L, "fixed value or lo:step:hi sweep");
    cmd_scan->add_option("--tau", scan_tau, "fixed value or lo:step:hi sweep");
    cmd_scan->add_option("--op", scan_op, "laplace|dirac");
    cmd_scan->add_option("--samples", scan_samples, "MC draws per point");
    cmd_scan->add_option("--seed", scan_seed, "RNG seed")->required();
    cmd_scan->add_option("--out", scan_out, "CSV output path (default stdout)");
    cmd_scan->add_option("--workers", scan_workers, "worker threads (0 = auto)");

    CLI11_PARSE(app, argc, argv);

    if (cmd_val->parsed()) {
        GeneratorSet gens = resolve_gens(val_gens);
        ValidationReport rep = validate_generators(gens);
        if (g_json) {
            std::cout << "{ \"label\": \"" << gens.label
                      << "\", \"genus\": " << gens.genus << ", \"relator_sign\": "
                      << rep.relator_sign
                      << ", \"max_det_residual\": " << fmt17(rep.max_det_residual)
                      << ", \"min_trace\": " << fmt17(rep.min_trace)
                      << ", \"relator_residual\": " << fmt17(rep.relator_residual)
                      << ", \"ok\": " << (rep.ok ? "true" : "false") << " }\n";
        } else {
            std::cout << "generator set: " << gens.label << "\n"
                      << "genus: " << gens.genus << "\n"
                      << "relator_sign: " << (rep.relator_sign > 0 ? "+1" : "-1")
                      << "\n"
                      << "max |det-1|: " << fmt17(rep.max_det_residual) << "\n"
                      << "min trace: " << fmt17(rep.min_trace) << "\n"
                      << "relator residual: " << fmt17(rep.relator_residual) << "\n"
                      << "status: " << (rep.ok ? "pass" : "FAIL") << " ("
                      << rep.message << ")\n";
        }
        return rep.ok ? 0 : 1;
    }

    if (cmd_enum->parsed()) {
        GeneratorSet gens = resolve_gens(en_gens);
        EnumOptions opts;
        opts.workers = en_workers;
        info("enumerating classes with L_max = " + fmt17(en_lmax) + " ...");
        LengthSpectrum spec = enumerate_classes(gens, en_lmax, opts);
        write_spectrum(spec, en_out);
        info("wrote " + std::to_string(spec.classes.size()) + " classes to " + en_out);
        if (en_check) {
            read_spectrum(en_out, gens);
            info("cache re-read and validated");
        }
        std::cout << "classes: " << spec.classes.size() << "\n"
                  << "cache: " << en_out << "\n"
                  << "hash: " << file_blob_hash(en_out) << "\n";
        return 0;
    }

    if (cmd_ifq->parsed()) {
        TestFunction tf = make_family(ifq_family, ifq_A);
        WindowParams w{ifq_L, ifq_tau};
        FluxQ q = FluxQ::parse(ifq_q);
        double v = i_fq(tf, w, q);
        std::cout << "{ \"ifq\": " << fmt17(v)
                  << ", \"error_bound\": " << fmt17(tf.quadrature_tol())
                  << ", \"A\": " << fmt17(ifq_A) << ", \"L\": " << fmt17(ifq_L)
                  << ", \"tau\": " << fmt17(ifq_tau) << ", \"q\": \"" << q.to_string()
                  << "\", \"family\": \"" << tf.family_tag() << "\" }\n";
        return 0;
    }

    if (cmd_den->parsed()) {
        TestFunction tf = make_family(den_family, den_A);
        double v = rmt_density(tf, rmt_kind_parse(den_kind));
        std::cout << "{ \"density\": " << fmt17(v) << ", \"kind\": \"" << den_kind
                  << "\", \"A\": " << fmt17(den_A) << ", \"family\": \""
                  << tf.family_tag() << "\" }\n";
        return 0;
    }

    if (cmd_var->parsed()) {
        GeneratorSet gens = resolve_gens(var_gens);
        LengthSpectrum spec = read_spectrum(var_spec, gens);
        FluxQ q = FluxQ::parse(var_q);
        SpectralKind kind =
            var_op == "dirac" ? SpectralKind::dirac : SpectralKind::laplace;
        OperatorKind op = make_operator(kind, q);
        TestFunction tf = TestFunction::bump(var_A);
        WindowParams w{var_L, var_tau};
        FluxSpec flux{q, gens.genus};
        StatReport rep =
            mc_flux_experiment(spec, flux, tf, w, op, var_samples, var_seed, var_workers);
        std::ostringstream cfg;
        cfg << "{ \"spectrum\": \"" << var_spec << "\", \"gens\": \"" << gens.label
            << "\", \"workers_fixed_output\": true }";
        const std::string json =
            report_to_json(rep, cfg.str(), file_blob_hash(var_spec));
        if (var_csv) {
            std::cout << "# config: " << cfg.str()
                      << " spectrum_hash: " << file_blob_hash(var_spec) << "\n"
                      << csv_header() << "\n"
                      << report_to_csv_row(rep) << "\n";
        } else {
            std::cout << json;
        }
        if (!var_out.empty()) {
            std::ofstream out(var_out);
            out << json;
        }
        return 0;
    }

    if (cmd_rmt->parsed()) {
        EnsembleSpec es;
        es.kind = rmt_kind_parse(rmt_kind);
        es.dimension = rmt_n;
        es.replicas = rmt_reps;
        es.window_center = rmt_center;
        es.window_width = rmt_W;
        es.use_dense = rmt_dense;
        TestFunction tf = TestFunction::bump(rmt_A);
        VarianceEstimate est = statistic_variance(es, tf, rmt_seed, rmt_workers);
        const double ref = rmt_density(tf, es.kind);
        std::cout << "{ \"variance\": " << fmt17(est.variance)
                  << ", \"se\": " << fmt17(est.standard_error)
                  << ", \"reference\": " << fmt17(ref)
                  << ", \"ratio_to_reference\": " << fmt17(est.variance / ref)
                  << ", \"kind\": \"" << rmt_kind << "\", \"n\": " << rmt_n
                  << ", \"reps\": " << rmt_reps << ", \"seed\": " << rmt_seed
                  << " }\n";
        return 0;
    }

    if (cmd_scan->parsed()) {
        GeneratorSet gens = resolve_gens(scan_gens);
        LengthSpectrum spec = read_spectrum(scan_spec, gens);
        FluxQ q = FluxQ::parse(scan_q);
        SpectralKind kind =
            scan_op == "dirac" ? SpectralKind::dirac : SpectralKind::laplace;
        OperatorKind op = make_operator(kind, q);
        FluxSpec flux{q, gens.genus};

        Range rL, rTau;
        if (scan_L.find(':') != std::string::npos) rL = parse_range(scan_L);
        else if (!scan_L.empty()) scan_L_fixed = std::stod(scan_L);
        if (scan_tau.find(':') != std::string::npos) rTau = parse_range(scan_tau);
        else if (!scan_tau.empty()) scan_tau_fixed = std::stod(scan_tau);
        if (rL.set == rTau.set)
            throw ConfigError("scan: exactly one of --L/--tau must be a range");

        std::ostringstream os;
        const std::string hash = file_blob_hash(scan_spec);
        os << "# config: { \"spectrum\": \"" << scan_spec << "\", \"q\": \""
           << q.to_string() << "\", \"A\": " << fmt17(scan_A) << ", \"op\": \""
           << scan_op << "\", \"samples\": " << scan_samples
           << ", \"seed\": " << scan_seed << " } spectrum_hash: " << hash << "\n";
        os << csv_header() << "\n";
        TestFunction tf = TestFunction::bump(scan_A);
        const Range& sweep = rL.set ? rL : rTau;
        for (double v = sweep.lo; v <= sweep.hi + 1e-12; v += sweep.step) {
            WindowParams w{rL.set ? v : scan_L_fixed, rTau.set ? v : scan_tau_fixed};
            StatReport rep = mc_flux_experiment(spec, flux, tf, w, op, scan_samples,
                                                scan_seed, scan_workers);
            os << report_to_csv_row(rep) << "\n";
        }
        if (scan_out.empty()) {
            std::cout << os.str();
        } else {
            std::ofstream out(scan_out);
            out << os.str();
            info("wrote scan to " + scan_out);
        }
        return 0;
    }

    return 1;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    } catch (const InvalidGenerators& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return 1;
    } catch (const InvalidFluxSpec& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return 1;
    } catch (const IncompleteSpectrum& e) {
        std::cerr << "incomplete input: " << e.what() << '\n';
        return 2;
    } catch (const FormatVersionMismatch& e) {
        std::cerr << "incomplete input: " << e.what() << '\n';
        return 2;
    } catch (const CorruptRecord& e) {
        std::cerr << "incomplete input: " << e.what() << '\n';
        return 2;
    } catch (const InvariantViolation& e) {
        std::cerr << "incomplete input: " << e.what() << '\n';
        return 2;
    } catch (const CutoffTooLarge& e) {
        std::cerr << "incomplete input: " << e.what() << '\n';
        return 2;
    } catch (const QuadratureFailure& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return 3;
    } catch (const NotHyperbolic& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return 3;
    } catch (const TrivialWord& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

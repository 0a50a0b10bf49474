// Command-line front end: evaluate lattice resolvents and Green's functions,
// tabulate them, run the validation suite, and fit calibration constants.
//
// Exit codes: 0 success, 1 validation failure, 2 usage or domain error.
// LGF_NUM_THREADS caps the quadrature worker count (default: all cores);
// the thread count never changes numerical results.

#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lgf/lgf.hpp"

namespace {

using lgf::cplx;

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fmt12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

cplx parse_complex(const std::string& s) {
    std::istringstream is(s);
    double re = 0.0, im = 0.0;
    char comma = 0;
    if (!(is >> re)) throw CLI::ValidationError("--t", "expected re[,im]");
    if (is >> comma) {
        if (comma != ',' || !(is >> im))
            throw CLI::ValidationError("--t", "expected re[,im]");
    }
    return {re, im};
}

struct EvalResult {
    cplx value{0.0, 0.0};
    std::size_t terms = 0;
    double err = 0.0;
};

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::domain_error(msg);
}

// Oracle evaluation with one grid doubling as the error estimate.
EvalResult oracle_eval(const lgf::LatticeSpec& spec, std::span<const int> r,
                       cplx lambda) {
    const int n = spec.dimension <= 2 ? 512 : 64;
    const cplx coarse = lgf::quadrature_resolvent(spec, r, lambda, n);
    const cplx fine = lgf::quadrature_resolvent(spec, r, lambda, 2 * n);
    EvalResult out;
    out.value = fine;
    out.terms = 1;
    for (int d = 0; d < spec.dimension; ++d) out.terms *= 2 * n;
    out.err = std::abs(fine - coarse);
    return out;
}

EvalResult evaluate(const std::string& family, const std::vector<int>& idx,
                    cplx t, const std::string& method, double tau1, double tau2) {
    EvalResult out;
    auto from_series = [&](const lgf::SeriesEval& ev) {
        if (!ev.converged) throw std::domain_error("series did not converge");
        out.value = ev.value;
        out.terms = ev.terms_used;
        out.err = ev.tail_estimate;
    };

    if (family == "chain1d") {
        require(idx.size() == 1, "chain1d takes one index");
        const int r = idx[0];
        if (method == "closed") {
            out.value = lgf::h1_closed(r, t);
        } else if (method == "series") {
            from_series(lgf::h1_gamma_series(r, t));
        } else if (method == "hyp") {
            from_series(lgf::h1_hyp(r, t));
        } else if (method == "oracle") {
            const std::array<int, 1> rv = {r};
            return oracle_eval(lgf::chain_lattice(), rv, 2.0 * t);
        } else {
            throw std::domain_error("chain1d methods: series, closed, hyp, oracle");
        }
        return out;
    }
    if (family == "square") {
        require(idx.size() == 2, "square takes indices r, s");
        const int r = idx[0], s = idx[1];
        if (method == "series") {
            from_series(lgf::h2_gamma_series(r, s, t));
        } else if (method == "hyp") {
            from_series(lgf::h2_4f3(r, s, t));
        } else if (method == "oracle") {
            require((r - s) % 2 == 0, "square indices must share parity");
            const std::array<int, 2> pq = {(r + s) / 2, (r - s) / 2};
            return oracle_eval(lgf::square_lattice(), pq, 4.0 * t);
        } else {
            throw std::domain_error("square methods: series, hyp, oracle");
        }
        return out;
    }
    if (family == "trihex" || family == "trihex-honeycomb" ||
        family == "trihex-triangular") {
        require(idx.size() == 2, "trihex takes indices p, q");
        int p = idx[0], q = idx[1];
        if (family == "trihex-triangular") {
            require((p + q) % 2 == 0, "triangular form needs p + q even");
            const int pp = q, qq = (p + q) / 2;
            p = pp;
            q = qq;
        }
        if (method == "series") {
            from_series(lgf::h_trihex_series(p, q, t));
        } else if (method == "oracle") {
            const std::array<int, 2> rs = {p + q, 2 * q - p};
            return oracle_eval(lgf::trihex_contour_lattice(), rs, t - 3.0);
        } else {
            throw std::domain_error("trihex methods: series, oracle");
        }
        return out;
    }
    if (family == "bcc") {
        require(!idx.empty() && idx.size() <= 3, "bcc takes 1 to 3 indices");
        const int dim = static_cast<int>(idx.size());
        if (method == "series") {
            from_series(lgf::h_bcc_series(idx, t, dim));
        } else if (method == "hyp") {
            from_series(lgf::h_bcc_parity_branch(idx, t, dim));
        } else if (method == "oracle") {
            return oracle_eval(lgf::bcc_lattice(dim), idx,
                               std::ldexp(1.0, dim) * t);
        } else {
            throw std::domain_error("bcc methods: series, hyp, oracle");
        }
        return out;
    }
    if (family == "nnn") {
        require(idx.size() == 1, "nnn takes one index");
        require(tau1 > 0.0, "nnn needs --tau1 > 0");
        if (method == "series") {
            from_series(lgf::h_nnn_series(idx[0], tau1, tau2));
        } else if (method == "oracle") {
            out.value = lgf::quadrature_resolvent_nnn(idx[0], tau1, tau2, 8192);
            out.terms = 8192;
            out.err = std::abs(out.value -
                               lgf::quadrature_resolvent_nnn(idx[0], tau1, tau2, 4096));
        } else {
            throw std::domain_error("nnn methods: series, oracle");
        }
        return out;
    }
    throw std::domain_error("unknown family '" + family + "'");
}

cplx native_from_lambda(const std::string& family, cplx lambda, int dim) {
    if (family == "chain1d") return lambda / 2.0;
    if (family == "square") return lambda / 4.0;
    if (family == "trihex" || family == "trihex-honeycomb" ||
        family == "trihex-triangular")
        return lambda + 3.0;
    if (family == "bcc") return lambda / std::ldexp(1.0, dim);
    throw std::domain_error("--lambda is not defined for family '" + family + "'");
}

std::string eval_record(const std::string& family, const std::vector<int>& idx,
                        cplx t, const std::string& method, const EvalResult& r) {
    std::ostringstream os;
    os << "{\"family\":\"" << family << "\",\"indices\":[";
    for (std::size_t i = 0; i < idx.size(); ++i)
        os << (i ? "," : "") << idx[i];
    os << "],\"spectral\":{\"re\":" << fmt17(t.real())
       << ",\"im\":" << fmt17(t.imag()) << "},\"method\":\"" << method
       << "\",\"value\":{\"re\":" << fmt17(r.value.real())
       << ",\"im\":" << fmt17(r.value.imag()) << "},\"terms_used\":" << r.terms
       << ",\"tail_estimate\":" << fmt17(r.err) << "}";
    return os.str();
}

void write_output(const std::string& out_path, const std::string& text) {
    const bool needs_newline = text.empty() || text.back() != '\n';
    if (out_path.empty()) {
        std::cout << text;
        if (needs_newline) std::cout << "\n";
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + out_path);
    f << text;
    if (needs_newline) f << "\n";
}

int run_table(const std::string& family, int lo, int hi, cplx t,
              const std::string& method, double tau1, double tau2,
              const std::string& out_path) {
    if (lo > hi) throw std::domain_error("empty index range");
    if (family == "nnn") {
        if (!(tau1 > 0.0)) throw std::domain_error("nnn needs --tau1 > 0");
        t = cplx{2.0 / tau1, 0.0};  // raw spectral value for the t columns
    }
    std::ostringstream csv;
    csv << "family,i1,i2,i3,t_re,t_im,value_re,value_im,terms,err\n";
    auto row = [&](const std::vector<int>& idx) {
        const auto r = evaluate(family, idx, t, method, tau1, tau2);
        csv << family;
        for (std::size_t d = 0; d < 3; ++d)
            csv << "," << (d < idx.size() ? std::to_string(idx[d]) : "");
        csv << "," << fmt12(t.real()) << "," << fmt12(t.imag()) << ","
            << fmt12(r.value.real()) << "," << fmt12(r.value.imag()) << ","
            << r.terms << "," << fmt12(r.err) << "\n";
    };
    if (family == "chain1d" || family == "nnn") {
        for (int r = lo; r <= hi; ++r) row({r});
    } else if (family == "square") {
        // physical indices; value is the Green's function green_square(p, q)
        for (int p = lo; p <= hi; ++p)
            for (int q = lo; q <= hi; ++q) {
                const auto ev = lgf::h2_gamma_series(p + q, p - q, t);
                const cplx g = lgf::square_green_constant * ev.value;
                csv << family << "," << p << "," << q << ",," << fmt12(t.real())
                    << "," << fmt12(t.imag()) << "," << fmt12(g.real()) << ","
                    << fmt12(g.imag()) << "," << ev.terms_used << ","
                    << fmt12(ev.tail_estimate) << "\n";
            }
    } else if (family == "trihex" || family == "trihex-honeycomb" ||
               family == "trihex-triangular") {
        for (int p = lo; p <= hi; ++p)
            for (int q = lo; q <= hi; ++q) {
                if (family == "trihex-triangular" && (p + q) % 2 != 0) continue;
                row({p, q});
            }
    } else if (family == "bcc") {
        for (int r1 = lo; r1 <= hi; ++r1)
            for (int r2 = lo; r2 <= hi; ++r2)
                for (int r3 = lo; r3 <= hi; ++r3) row({r1, r2, r3});
    } else {
        throw std::domain_error("unknown family '" + family + "'");
    }
    write_output(out_path, csv.str());
    return 0;
}

int run_correlation(const std::string& family, const std::vector<int>& idx,
                    const std::string& out_path) {
    std::ostringstream os;
    if (family == "chain1d") {
        require(idx.size() == 1, "chain1d takes one index");
        const double analytic = lgf::correlation_1d(idx[0]);
        const std::array<int, 1> rv = {idx[0]};
        const double quad =
            lgf::quadrature_correlation(lgf::chain_lattice(), rv, 128);
        os << "{\"family\":\"chain1d\",\"indices\":[" << idx[0]
           << "],\"value\":" << fmt17(analytic)
           << ",\"routes\":{\"analytic\":" << fmt17(analytic)
           << ",\"quadrature\":" << fmt17(quad)
           << "},\"difference\":" << fmt17(std::abs(analytic - quad)) << "}";
    } else if (family == "square") {
        require(idx.size() == 2, "square takes indices p, q");
        const auto r = lgf::correlation_square_routes(idx[0], idx[1]);
        os << "{\"family\":\"square\",\"indices\":[" << idx[0] << "," << idx[1]
           << "],\"value\":" << fmt17(r.value)
           << ",\"routes\":{\"edge_limit\":" << fmt17(r.series_route)
           << ",\"quadrature\":" << fmt17(r.quadrature_route)
           << "},\"difference\":" << fmt17(r.difference) << "}";
    } else if (family == "trihex" || family == "trihex-honeycomb") {
        require(idx.size() == 2, "trihex takes indices p, q");
        const auto r = lgf::correlation_trihex_routes(idx[0], idx[1]);
        os << "{\"family\":\"" << family << "\",\"indices\":[" << idx[0] << ","
           << idx[1] << "],\"value\":" << fmt17(r.value)
           << ",\"routes\":{\"edge_limit\":" << fmt17(r.edge_limit_route)
           << ",\"quadrature\":" << fmt17(r.quadrature_route)
           << "},\"difference\":" << fmt17(r.difference) << "}";
    } else {
        throw std::domain_error(
            "correlations are implemented for chain1d, square, trihex");
    }
    write_output(out_path, os.str());
    return 0;
}

int run_validate(const std::string& config_path, bool strict,
                 const std::string& out_path) {
    lgf::ValidationConfig cfg;
    if (!config_path.empty()) {
        std::ifstream f(config_path);
        if (!f) {
            std::cerr << "error: cannot read config " << config_path << "\n";
            return 2;
        }
        lgf::ordered_json j;
        try {
            f >> j;
            lgf::apply_json_overrides(cfg, j);
        } catch (const std::exception& e) {
            std::cerr << "error: malformed config: " << e.what() << "\n";
            return 2;
        }
    }
    if (strict) cfg.strict_paper = true;
    const auto report = lgf::run_identity_suite(cfg);
    write_output(out_path, lgf::to_json(report).dump(2));
    const auto s = report.summary();
    std::cerr << "validation: " << s.passed << " passed, " << s.failed
              << " failed, " << s.experimental_failed << " experimental failed"
              << (report.strict ? " (strict)" : "") << "\n";
    return report.overall_pass() ? 0 : 1;
}

int run_calibrate(const std::string& family, double spread_tol,
                  const std::string& out_path) {
    std::vector<cplx> ts;
    std::vector<std::array<int, 2>> idx;
    lgf::default_calibration_samples(family, ts, idx);
    const auto rep = lgf::calibrate_prefactor(family, ts, idx);
    write_output(out_path, lgf::to_json(rep).dump(2));
    return rep.relative_spread <= spread_tol ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lattice Green's function evaluator"};
    app.require_subcommand(1);

    const std::vector<std::string> families = {
        "chain1d", "square",      "trihex", "trihex-honeycomb",
        "trihex-triangular", "bcc", "nnn"};

    std::string family, t_str, lambda_str, method = "series", out_path,
                               config_path;
    std::vector<int> indices;
    double tau1 = 0.0, tau2 = 0.0, spread_tol = 1e-6;
    int range_lo = 0, range_hi = -1;
    bool strict = false;

    auto add_family = [&](CLI::App* cmd, bool required = true) {
        auto* opt = cmd->add_option("--family", family, "lattice family")
                        ->check(CLI::IsMember(families));
        if (required) opt->required();
    };

    auto* eval = app.add_subcommand("eval", "evaluate one resolvent value");
    add_family(eval);
    eval->add_option("--r", indices, "index vector (repeat or comma-separate)")
        ->delimiter(',');
    eval->add_option("--t", t_str, "native spectral parameter re[,im]");
    eval->add_option("--lambda", lambda_str, "raw spectral parameter re[,im]");
    eval->add_option("--method", method, "series|closed|hyp|oracle");
    eval->add_option("--tau1", tau1, "nnn nearest-neighbor weight");
    eval->add_option("--tau2", tau2, "nnn next-nearest-neighbor weight");
    eval->add_option("--out", out_path, "write the JSON record here");

    auto* table = app.add_subcommand("table", "tabulate values as CSV");
    add_family(table);
    table->add_option("--range", [&range_lo, &range_hi](const std::vector<std::string>& v) {
                 const auto& s = v.front();
                 const auto colon = s.find(':');
                 if (colon == std::string::npos) return false;
                 try {
                     range_lo = std::stoi(s.substr(0, colon));
                     range_hi = std::stoi(s.substr(colon + 1));
                 } catch (...) {
                     return false;
                 }
                 return true;
             },
             "index range lo:hi (applied per index dimension)")
        ->required();
    table->add_option("--t", t_str, "native spectral parameter re[,im]");
    table->add_option("--lambda", lambda_str, "raw spectral parameter re[,im]");
    table->add_option("--method", method, "series|closed|hyp|oracle");
    table->add_option("--tau1", tau1, "nnn nearest-neighbor weight");
    table->add_option("--tau2", tau2, "nnn next-nearest-neighbor weight");
    table->add_option("--out", out_path, "write the CSV here");

    auto* validate = app.add_subcommand("validate", "run the identity suite");
    validate->add_option("--config", config_path, "JSON tolerance overrides");
    validate->add_flag("--strict-paper", strict,
                       "treat documented-discrepancy checks as core");
    validate->add_option("--out", out_path, "write the JSON report here");

    auto* correlation =
        app.add_subcommand("correlation", "regularized correlation, both routes");
    add_family(correlation);
    correlation->add_option("--r", indices, "index vector")->delimiter(',');
    correlation->add_option("--out", out_path, "write the JSON record here");

    auto* calibrate =
        app.add_subcommand("calibrate", "fit the oracle/series constant");
    add_family(calibrate);
    calibrate->add_option("--spread-tol", spread_tol,
                          "maximum acceptable relative spread");
    calibrate->add_option("--out", out_path, "write the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (eval->parsed()) {
            if (t_str.empty() && lambda_str.empty() && family != "nnn")
                throw std::domain_error("need --t or --lambda");
            cplx t;
            if (!lambda_str.empty()) {
                const int dim = static_cast<int>(indices.size());
                t = native_from_lambda(family, parse_complex(lambda_str), dim);
            } else if (!t_str.empty()) {
                t = parse_complex(t_str);
            }
            const auto r = evaluate(family, indices, t, method, tau1, tau2);
            // nnn records report the raw spectral value 2/tau1
            if (family == "nnn") t = cplx{2.0 / tau1, 0.0};
            write_output(out_path, eval_record(family, indices, t, method, r));
            return 0;
        }
        if (table->parsed()) {
            cplx t;
            if (!lambda_str.empty()) {
                t = native_from_lambda(family, parse_complex(lambda_str),
                                       family == "bcc" ? 3 : 2);
            } else if (!t_str.empty()) {
                t = parse_complex(t_str);
            } else if (family != "nnn") {
                throw std::domain_error("need --t or --lambda");
            }
            return run_table(family, range_lo, range_hi, t, method, tau1, tau2,
                             out_path);
        }
        if (validate->parsed()) return run_validate(config_path, strict, out_path);
        if (correlation->parsed()) return run_correlation(family, indices, out_path);
        if (calibrate->parsed()) return run_calibrate(family, spread_tol, out_path);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

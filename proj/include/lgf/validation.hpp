#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <numbers>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lgf/chain1d.hpp"
#include "lgf/elliptic.hpp"
#include "lgf/extensions.hpp"
#include "lgf/fitting.hpp"
#include "lgf/gamma.hpp"
#include "lgf/lattice.hpp"
#include "lgf/pfq.hpp"
#include "lgf/quadrature.hpp"
#include "lgf/series.hpp"
#include "lgf/square2d.hpp"
#include "lgf/trihex2d.hpp"

namespace lgf {

using ordered_json = nlohmann::ordered_json;

/// One cross-check: two evaluation routes, the largest observed difference
/// over the sampled parameters, and the tolerance applied.
struct CheckRecord {
    std::string id;
    std::string family;
    std::string params;
    std::string method_a;
    std::string method_b;
    double difference = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    bool experimental = false;
    std::string note;
};

struct ValidationSummary {
    int passed = 0;
    int failed = 0;
    int experimental_failed = 0;
};

/// Machine-readable result of the identity suite.  Experimental checks record
/// documented discrepancies of the source formulas; they only gate the
/// overall verdict in strict mode.
struct ValidationReport {
    int version = 1;
    bool strict = false;
    std::vector<CheckRecord> checks;
    std::vector<std::string> findings;

    ValidationSummary summary() const {
        ValidationSummary s;
        for (const auto& c : checks) {
            if (c.passed)
                ++s.passed;
            else if (c.experimental)
                ++s.experimental_failed;
            else
                ++s.failed;
        }
        return s;
    }

    bool overall_pass() const {
        const auto s = summary();
        return s.failed == 0 && (!strict || s.experimental_failed == 0);
    }
};

inline ordered_json to_json(const CheckRecord& c) {
    ordered_json j;
    j["id"] = c.id;
    j["family"] = c.family;
    j["params"] = c.params;
    j["method_a"] = c.method_a;
    j["method_b"] = c.method_b;
    j["difference"] = c.difference;
    j["tolerance"] = c.tolerance;
    j["pass"] = c.passed;
    j["experimental"] = c.experimental;
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

inline CheckRecord check_from_json(const ordered_json& j) {
    CheckRecord c;
    c.id = j.at("id").get<std::string>();
    c.family = j.at("family").get<std::string>();
    c.params = j.at("params").get<std::string>();
    c.method_a = j.at("method_a").get<std::string>();
    c.method_b = j.at("method_b").get<std::string>();
    c.difference = j.at("difference").get<double>();
    c.tolerance = j.at("tolerance").get<double>();
    c.passed = j.at("pass").get<bool>();
    c.experimental = j.at("experimental").get<bool>();
    if (j.contains("note")) c.note = j.at("note").get<std::string>();
    return c;
}

inline ordered_json to_json(const ValidationReport& r) {
    ordered_json j;
    j["version"] = r.version;
    j["strict"] = r.strict;
    j["checks"] = ordered_json::array();
    for (const auto& c : r.checks) j["checks"].push_back(to_json(c));
    j["findings"] = r.findings;
    const auto s = r.summary();
    j["summary"] =
        ordered_json{{"passed", s.passed},
                     {"failed", s.failed},
                     {"experimental_failed", s.experimental_failed}};
    return j;
}

inline ValidationReport report_from_json(const ordered_json& j) {
    ValidationReport r;
    r.version = j.at("version").get<int>();
    r.strict = j.at("strict").get<bool>();
    for (const auto& jc : j.at("checks")) r.checks.push_back(check_from_json(jc));
    for (const auto& f : j.at("findings"))
        r.findings.push_back(f.get<std::string>());
    return r;
}

/// Tolerances and sample grids of the identity suite.  Defaults are the
/// module contracts; a JSON config may override individual entries.
struct ValidationConfig {
    bool strict_paper = false;

    double tol_chain_hyp = 1e-12;
    double tol_chain_gamma = 1e-10;
    double tol_chain_branch = 1e-10;
    double tol_chain_oracle = 1e-10;
    double tol_chain_identity = 1e-10;
    double tol_chain_decay = 1e-12;
    double tol_chain_correlation = 1e-8;

    double tol_square_repr = 1e-9;
    double tol_square_oracle = 1e-9;
    double tol_square_identity = 1e-9;
    double tol_square_logfit = 1e-5;
    double tol_square_correlation = 1e-6;
    double tol_corr_symmetry = 1e-10;

    double tol_trihex_oracle = 1e-8;
    double tol_trihex_identity = 1e-8;
    double tol_lauricella = 1e-10;
    double tol_trihex_green = 1e-8;
    double tol_trihex_correlation = 1e-6;

    double tol_bcc_d1 = 1e-12;
    double tol_bcc_d2 = 1e-10;
    double tol_bcc_d3 = 1e-6;
    double tol_bcc_branch = 1e-9;
    double tol_bcc_identity = 1e-8;

    double tol_nnn_reduction = 1e-10;
    double tol_nnn_oracle = 1e-8;
    double tol_nnn_identity = 1e-9;
    double tol_nnn_continuity = 1e-5;

    double tol_calibration_spread = 1e-6;
    double tol_calibration_chain = 1e-9;

    std::vector<cplx> chain_ts = {cplx{1.5, 0.0}, cplx{2.0, 0.0}, cplx{5.0, 0.0},
                                  cplx{1.0, 2.0}};
    std::vector<cplx> square_ts = {cplx{1.5, 0.0}, cplx{3.0, 0.0}};
    std::vector<double> trihex_ts = {12.0, 16.0};
};

inline void apply_json_overrides(ValidationConfig& cfg, const ordered_json& j) {
    if (!j.is_object())
        throw std::invalid_argument("validation config: expected a JSON object");
    for (const auto& [key, val] : j.items()) {
        if (key == "strict_paper") {
            cfg.strict_paper = val.get<bool>();
            continue;
        }
        if (key == "tolerances") {
            if (!val.is_object())
                throw std::invalid_argument("validation config: tolerances must be an object");
            for (const auto& [name, tv] : val.items()) {
                const double x = tv.get<double>();
                if (!(x > 0.0))
                    throw std::invalid_argument("validation config: tolerance must be positive");
                if (name == "chain_hyp") cfg.tol_chain_hyp = x;
                else if (name == "chain_gamma") cfg.tol_chain_gamma = x;
                else if (name == "chain_branch") cfg.tol_chain_branch = x;
                else if (name == "chain_oracle") cfg.tol_chain_oracle = x;
                else if (name == "chain_identity") cfg.tol_chain_identity = x;
                else if (name == "chain_decay") cfg.tol_chain_decay = x;
                else if (name == "chain_correlation") cfg.tol_chain_correlation = x;
                else if (name == "square_repr") cfg.tol_square_repr = x;
                else if (name == "square_oracle") cfg.tol_square_oracle = x;
                else if (name == "square_identity") cfg.tol_square_identity = x;
                else if (name == "square_logfit") cfg.tol_square_logfit = x;
                else if (name == "square_correlation") cfg.tol_square_correlation = x;
                else if (name == "corr_symmetry") cfg.tol_corr_symmetry = x;
                else if (name == "trihex_oracle") cfg.tol_trihex_oracle = x;
                else if (name == "trihex_identity") cfg.tol_trihex_identity = x;
                else if (name == "lauricella") cfg.tol_lauricella = x;
                else if (name == "trihex_green") cfg.tol_trihex_green = x;
                else if (name == "trihex_correlation") cfg.tol_trihex_correlation = x;
                else if (name == "bcc_d1") cfg.tol_bcc_d1 = x;
                else if (name == "bcc_d2") cfg.tol_bcc_d2 = x;
                else if (name == "bcc_d3") cfg.tol_bcc_d3 = x;
                else if (name == "bcc_branch") cfg.tol_bcc_branch = x;
                else if (name == "bcc_identity") cfg.tol_bcc_identity = x;
                else if (name == "nnn_reduction") cfg.tol_nnn_reduction = x;
                else if (name == "nnn_oracle") cfg.tol_nnn_oracle = x;
                else if (name == "nnn_identity") cfg.tol_nnn_identity = x;
                else if (name == "nnn_continuity") cfg.tol_nnn_continuity = x;
                else if (name == "calibration_spread") cfg.tol_calibration_spread = x;
                else if (name == "calibration_chain") cfg.tol_calibration_chain = x;
                else
                    throw std::invalid_argument("validation config: unknown tolerance '" +
                                                name + "'");
            }
            continue;
        }
        throw std::invalid_argument("validation config: unknown key '" + key + "'");
    }
}

/// Result of fitting the proportionality constant between a family's direct
/// Fourier integral (quadrature oracle) and its series resolvent.
struct CalibrationSample {
    cplx t{0.0, 0.0};
    std::array<int, 2> indices{0, 0};
    cplx ratio{0.0, 0.0};
};

struct CalibrationReport {
    std::string family;
    cplx constant{0.0, 0.0};
    double relative_spread = 0.0;
    std::vector<CalibrationSample> samples;
    cplx reference_constant{0.0, 0.0};
    std::string reference_note;
    bool matches_reference = false;
};

inline ordered_json to_json(const CalibrationReport& r) {
    ordered_json j;
    j["family"] = r.family;
    j["constant"] = ordered_json{{"re", r.constant.real()}, {"im", r.constant.imag()}};
    j["relative_spread"] = r.relative_spread;
    j["samples"] = ordered_json::array();
    for (const auto& s : r.samples) {
        j["samples"].push_back(ordered_json{
            {"t", ordered_json{{"re", s.t.real()}, {"im", s.t.imag()}}},
            {"indices", ordered_json::array({s.indices[0], s.indices[1]})},
            {"ratio", ordered_json{{"re", s.ratio.real()}, {"im", s.ratio.imag()}}}});
    }
    j["reference_constant"] = ordered_json{{"re", r.reference_constant.real()},
                                           {"im", r.reference_constant.imag()}};
    j["reference_note"] = r.reference_note;
    j["matches_reference"] = r.matches_reference;
    return j;
}

namespace detail {

inline cplx calibration_oracle(const std::string& family, cplx t,
                               std::array<int, 2> idx) {
    if (family == "chain1d") {
        const std::array<int, 1> r = {idx[0]};
        return quadrature_resolvent(chain_lattice(), r, 2.0 * t, 512);
    }
    if (family == "square") {
        const std::array<int, 2> r = {idx[0], idx[1]};
        return quadrature_resolvent(square_lattice(), r, 4.0 * t, 256);
    }
    if (family == "trihex-honeycomb") {
        const cplx u = (t - 3.0) / 2.0;
        const std::array<int, 2> r = {idx[0], idx[1]};
        return quadrature_resolvent(honeycomb_lattice(), r, u, 256);
    }
    if (family == "trihex-triangular") {
        const std::array<int, 2> r = {idx[0], idx[1]};
        return quadrature_resolvent(triangular_lattice(), r, t - 3.0, 256);
    }
    throw std::invalid_argument("calibrate_prefactor: unknown family '" + family + "'");
}

inline cplx calibration_series(const std::string& family, cplx t,
                               std::array<int, 2> idx) {
    if (family == "chain1d") return h1_gamma_series(idx[0], t).value;
    if (family == "square") return h2_gamma_series(idx[0] + idx[1], idx[0] - idx[1], t).value;
    if (family == "trihex-honeycomb") return h_trihex_series(idx[0], idx[1], t).value;
    if (family == "trihex-triangular") {
        if (((idx[0] + idx[1]) % 2 + 2) % 2 != 0)
            throw std::domain_error("calibrate_prefactor: triangular indices need p + q even");
        return h_trihex_series(idx[1], (idx[0] + idx[1]) / 2, t).value;
    }
    throw std::invalid_argument("calibrate_prefactor: unknown family '" + family + "'");
}

}  // namespace detail

/// Least-squares constant c with oracle ~ c * series across the sample set;
/// the per-sample ratio spread diagnoses index-map errors.
inline CalibrationReport calibrate_prefactor(
    const std::string& family, std::span<const cplx> ts,
    std::span<const std::array<int, 2>> indices) {
    if (ts.size() < 3)
        throw std::invalid_argument("calibrate_prefactor: need >= 3 spectral samples");
    if (indices.size() < 3)
        throw std::invalid_argument("calibrate_prefactor: need >= 3 index samples");

    CalibrationReport rep;
    rep.family = family;
    cplx num{0.0, 0.0};
    double den = 0.0;
    for (cplx t : ts) {
        for (const auto& idx : indices) {
            const cplx h = detail::calibration_series(family, t, idx);
            const cplx o = detail::calibration_oracle(family, t, idx);
            num += std::conj(h) * o;
            den += std::norm(h);
            rep.samples.push_back(CalibrationSample{t, idx, o / h});
        }
    }
    rep.constant = num / den;
    double spread = 0.0;
    for (const auto& s : rep.samples)
        spread = std::max(spread,
                          std::abs(s.ratio - rep.constant) / std::abs(rep.constant));
    rep.relative_spread = spread;

    if (family == "chain1d") {
        rep.reference_constant = 1.0;
        rep.reference_note = "direct substitution x = exp(i theta)";
    } else if (family == "square") {
        rep.reference_constant = 1.0 / (8.0 * std::numbers::pi * std::numbers::pi);
        rep.reference_note = "literature value 1/(8 pi^2); measured constant is 1";
    } else if (family == "trihex-honeycomb") {
        rep.reference_constant = -6.0;
        rep.reference_note = "literature value -6 at the singular point; measured +2";
    } else {
        rep.reference_constant = -1.5;
        rep.reference_note = "literature value -3/2 at the singular point; measured +1";
    }
    rep.matches_reference =
        std::abs(rep.constant - rep.reference_constant) <=
        1e-6 * std::max(1.0, std::abs(rep.reference_constant));
    return rep;
}

/// Default calibration sample sets per family.
inline void default_calibration_samples(const std::string& family,
                                        std::vector<cplx>& ts,
                                        std::vector<std::array<int, 2>>& indices) {
    if (family == "chain1d") {
        ts = {cplx{1.5, 0.0}, cplx{2.0, 0.0}, cplx{3.0, 0.0}, cplx{5.0, 0.0}};
        indices = {{0, 0}, {1, 0}, {2, 0}, {3, 0}};
    } else if (family == "square") {
        ts = {cplx{1.5, 0.0}, cplx{2.0, 0.0}, cplx{3.0, 0.0}, cplx{5.0, 0.0}};
        indices = {{0, 0}, {1, 0}, {1, 1}, {2, 1}};
    } else if (family == "trihex-honeycomb") {
        ts = {cplx{11.0, 0.0}, cplx{12.0, 0.0}, cplx{13.0, 0.0}};
        indices = {{0, 0}, {1, 0}, {1, 1}, {2, 1}};
    } else if (family == "trihex-triangular") {
        ts = {cplx{11.0, 0.0}, cplx{12.0, 0.0}, cplx{13.0, 0.0}};
        indices = {{0, 0}, {1, 1}, {2, 0}, {3, 1}};
    } else {
        throw std::invalid_argument("default_calibration_samples: unknown family '" +
                                    family + "'");
    }
}

namespace detail {

class SuiteBuilder {
  public:
    explicit SuiteBuilder(const ValidationConfig& cfg) : cfg_(cfg) {
        report_.strict = cfg.strict_paper;
    }

    void add(std::string id, std::string family, std::string params,
             std::string method_a, std::string method_b, double diff, double tol,
             bool experimental = false, std::string note = "") {
        CheckRecord c;
        c.id = std::move(id);
        c.family = std::move(family);
        c.params = std::move(params);
        c.method_a = std::move(method_a);
        c.method_b = std::move(method_b);
        c.difference = diff;
        c.tolerance = tol;
        c.passed = diff <= tol;
        c.experimental = experimental;
        c.note = std::move(note);
        report_.checks.push_back(std::move(c));
    }

    void finding(std::string text) { report_.findings.push_back(std::move(text)); }

    ValidationReport take() && { return std::move(report_); }

    const ValidationConfig& cfg_;
    ValidationReport report_;
};

inline std::string fmt_cplx(cplx z) {
    std::ostringstream os;
    os << z.real();
    if (z.imag() != 0.0) os << (z.imag() > 0 ? "+" : "") << z.imag() << "i";
    return os.str();
}

inline void run_chain_checks(SuiteBuilder& b) {
    const auto& cfg = b.cfg_;
    const LatticeSpec chain = chain_lattice();

    double d_hyp = 0.0, d_gamma = 0.0, d_branch = 0.0, d_oracle = 0.0;
    for (cplx t : cfg.chain_ts) {
        for (int r = 0; r <= 6; ++r) {
            const cplx closed = h1_closed(r, t);
            const double scale = std::abs(closed);
            d_hyp = std::max(d_hyp, std::abs(h1_hyp(r, t).value - closed) / scale);
            d_gamma = std::max(d_gamma,
                               std::abs(h1_gamma_series(r, t).value - closed) / scale);
            d_branch = std::max(
                d_branch, std::abs(h1_parity_branch(r, t).value - closed) / scale);
            const std::array<int, 1> rv = {r};
            d_oracle = std::max(d_oracle,
                                std::abs(quadrature_resolvent(chain, rv, 2.0 * t, 512) -
                                         closed));
        }
    }
    b.add("chain.hyp_vs_closed", "chain1d", "t in grid, r=0..6", "h1_hyp",
          "h1_closed", d_hyp, cfg.tol_chain_hyp);
    b.add("chain.gamma_vs_closed", "chain1d", "t in grid, r=0..6",
          "h1_gamma_series", "h1_closed", d_gamma, cfg.tol_chain_gamma);
    b.add("chain.branch_vs_closed", "chain1d", "t in grid, r=0..6",
          "h1_parity_branch", "h1_closed", d_branch, cfg.tol_chain_branch);
    b.add("chain.closed_vs_oracle", "chain1d", "t in grid, r=0..6", "h1_closed",
          "quadrature_resolvent", d_oracle, cfg.tol_chain_oracle);

    // discrete resolvent identity for each representation
    const std::vector<std::pair<std::string, std::function<cplx(int, cplx)>>>
        evals = {
            {"closed", [](int r, cplx t) { return h1_closed(r, t); }},
            {"hyp", [](int r, cplx t) { return h1_hyp(r, t).value; }},
            {"gamma", [](int r, cplx t) { return h1_gamma_series(r, t).value; }},
            {"branch", [](int r, cplx t) { return h1_parity_branch(r, t).value; }},
        };
    const std::vector<cplx> id_ts = {cplx{1.5, 0.0}, cplx{2.0, 0.0}, cplx{1.0, 2.0}};
    for (const auto& [name, H] : evals) {
        double worst = 0.0;
        for (cplx t : id_ts) {
            auto Hfun = [&, t](std::span<const int> rv) { return H(rv[0], t); };
            for (int r = -3; r <= 3; ++r) {
                const std::array<int, 1> rv = {r};
                worst = std::max(
                    worst, std::abs(resolvent_identity_residual(chain, rv, 2.0 * t, Hfun)));
            }
        }
        b.add("chain.identity." + name, "chain1d", "3 off-spectrum t, |r|<=3",
              "lambda H - stencil", "delta(r)", worst, cfg.tol_chain_identity);
    }

    // geometric decay H_{r+1}/H_r = t - sqrt(t^2 - 1)
    double d_decay = 0.0;
    for (cplx t : cfg.chain_ts) {
        const cplx ratio_expect = t - t * std::sqrt(1.0 - 1.0 / (t * t));
        for (int r = 0; r <= 5; ++r) {
            const cplx ratio = h1_closed(r + 1, t) / h1_closed(r, t);
            d_decay = std::max(d_decay, std::abs(ratio - ratio_expect));
        }
    }
    b.add("chain.geometric_decay", "chain1d", "t in grid, r=0..5",
          "H_{r+1}/H_r", "t - sqrt(t^2-1)", d_decay, cfg.tol_chain_decay);

    double d_corr = 0.0;
    for (int r = 0; r <= 5; ++r) {
        const std::array<int, 1> rv = {r};
        d_corr = std::max(d_corr, std::abs(quadrature_correlation(chain, rv, 64) -
                                           correlation_1d(r)));
    }
    b.add("chain.correlation", "chain1d", "r=0..5", "quadrature_correlation",
          "-|r|/2", d_corr, cfg.tol_chain_correlation);
}

inline void run_square_checks(SuiteBuilder& b) {
    const auto& cfg = b.cfg_;
    const LatticeSpec sq = square_lattice();

    double d_4f3 = 0.0, d_branch = 0.0, d_oracle = 0.0;
    for (cplx t : cfg.square_ts) {
        for (int r = 0; r <= 4; ++r) {
            for (int s = -r; s <= r; ++s) {
                if ((r - s) % 2 != 0) continue;
                const cplx ref = h2_gamma_series(r, s, t).value;
                const double scale = std::max(1.0, std::abs(ref));
                d_4f3 = std::max(d_4f3, std::abs(h2_4f3(r, s, t).value - ref) / scale);
                d_branch = std::max(
                    d_branch, std::abs(h2_parity_branch(r, s, t).value - ref) / scale);
                // physical indices from the rotated pair
                const std::array<int, 2> pq = {(r + s) / 2, (r - s) / 2};
                d_oracle = std::max(
                    d_oracle,
                    std::abs(quadrature_resolvent(sq, pq, 4.0 * t, 256) - ref));
            }
        }
    }
    b.add("square.4f3_vs_gamma", "square", "t in {1.5,3}, r<=4, |s|<=r, parity",
          "h2_4f3", "h2_gamma_series", d_4f3, cfg.tol_square_repr);
    b.add("square.branch_vs_gamma", "square", "t in {1.5,3}, r<=4, |s|<=r, parity",
          "h2_parity_branch", "h2_gamma_series", d_branch, cfg.tol_square_repr);
    b.add("square.gamma_vs_oracle", "square", "t in {1.5,3}, lambda=4t, physical map",
          "h2_gamma_series", "quadrature_resolvent", d_oracle, cfg.tol_square_oracle);

    // elliptic identification at t = 2
    {
        const cplx t{2.0, 0.0};
        const double via_agm =
            (2.0 / std::numbers::pi) * elliptic_k_agm(0.25) / 8.0;
        HyperParams hp;
        hp.numerator = {0.5, 0.5};
        hp.denominator = {1.0};
        hp.argument = 0.25;
        const double via_2f1 = (pfq(hp).value / (4.0 * t)).real();
        const cplx via_series = h2_gamma_series(0, 0, t).value;
        const double worst =
            std::max(std::abs(via_series - via_agm), std::abs(via_series - via_2f1));
        b.add("square.elliptic_identity", "square", "t=2, (r,s)=(0,0)",
              "h2_gamma_series", "(1/4t) 2F1(1/2,1/2;1;1/t^2), AGM", worst, 1e-10);
    }

    // resolvent identity in physical indices at lambda = 4t
    {
        double worst = 0.0;
        for (cplx t : cfg.square_ts) {
            auto H = [&, t](std::span<const int> pq) {
                return h2_gamma_series(pq[0] + pq[1], pq[0] - pq[1], t).value;
            };
            for (int p = -3; p <= 3; ++p)
                for (int q = -3; q <= 3; ++q) {
                    const std::array<int, 2> pq = {p, q};
                    worst = std::max(worst, std::abs(resolvent_identity_residual(
                                                sq, pq, 4.0 * t, H)));
                }
        }
        b.add("square.identity.gamma", "square", "t in {1.5,3}, |p|,|q|<=3",
              "lambda H - stencil", "delta(p,q)", worst, cfg.tol_square_identity);
    }

    // isotropy of the Green's function
    {
        double worst = 0.0;
        for (cplx t : cfg.square_ts) {
            worst = std::max(worst, std::abs(green_square(1, 2, t) - green_square(2, 1, t)));
            worst = std::max(worst, std::abs(green_square(2, 0, t) - green_square(0, 2, t)));
        }
        b.add("square.green_symmetry", "square", "t in {1.5,3}", "green(p,q)",
              "green(q,p)", worst, 1e-12);
    }

    // log-coefficient constancy across (p, q)
    {
        const cplx c00 = log_coefficient(0, 0);
        double worst = 0.0;
        for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 0}, {1, 1}, {2, 1}})
            worst = std::max(worst, std::abs(log_coefficient(p, q) - c00));
        b.add("square.logfit_constancy", "square", "(p,q) in {(0,0),(1,0),(1,1),(2,1)}",
              "log_coefficient(p,q)", "log_coefficient(0,0)", worst,
              cfg.tol_square_logfit,
              false, "c_log(0,0) = " + fmt_cplx(c00));
    }

    // correlation: two routes and the known value at (1,0)
    {
        const auto routes = correlation_square_routes(1, 0, 1.0);
        const double worst = std::max(routes.difference,
                                      std::abs(routes.quadrature_route + 0.25));
        b.add("square.correlation_routes", "square", "(p,q)=(1,0)",
              "edge limit of green_square", "quadrature_correlation", worst,
              cfg.tol_square_correlation);
        const std::array<int, 2> r11 = {1, 1};
        const double c11 = quadrature_correlation_extrapolated(sq, r11, 512);
        b.add("square.correlation_resistor", "square", "(p,q)=(1,1)",
              "quadrature_correlation", "-1/pi", std::abs(c11 + 1.0 / std::numbers::pi),
              cfg.tol_square_correlation);
    }

    // dihedral symmetry of the correlation
    {
        const std::array<std::array<int, 2>, 4> idx = {
            {{2, 1}, {1, 2}, {-2, 1}, {2, -1}}};
        std::array<double, 4> vals{};
        for (std::size_t i = 0; i < idx.size(); ++i)
            vals[i] = quadrature_correlation(sq, idx[i], 1024);
        double worst = 0.0;
        for (std::size_t i = 1; i < idx.size(); ++i)
            worst = std::max(worst, std::abs(vals[i] - vals[0]));
        b.add("square.correlation_symmetry", "square", "(2,1) orbit, n=1024",
              "correlation(p,q)", "correlation(sym(p,q))", worst,
              cfg.tol_corr_symmetry);
    }
}

inline void run_trihex_checks(SuiteBuilder& b) {
    const auto& cfg = b.cfg_;
    const LatticeSpec contour = trihex_contour_lattice();

    double d_oracle = 0.0;
    for (double t : cfg.trihex_ts) {
        for (auto [p, q] :
             std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {1, 1}, {2, 1}}) {
            const cplx series = h_trihex_series(p, q, t).value;
            const std::array<int, 2> rs = {p + q, 2 * q - p};
            const cplx oracle = quadrature_resolvent(contour, rs, t - 3.0, 256);
            d_oracle = std::max(d_oracle, std::abs(series - oracle));
        }
    }
    b.add("trihex.series_vs_oracle", "trihex", "t in {12,16}, (p,q) sample",
          "h_trihex_series", "quadrature_resolvent", d_oracle, cfg.tol_trihex_oracle);

    // resolvent identity on the contour lattice at t = 12 (lambda = 9)
    {
        const double t = 12.0;
        std::map<std::pair<int, int>, cplx> cache;
        auto H = [t, &cache](std::span<const int> rs) -> cplx {
            const int r = rs[0], s = rs[1];
            if (((r + s) % 3 + 3) % 3 != 0) return {0.0, 0.0};
            const auto key = std::make_pair(r, s);
            if (auto it = cache.find(key); it != cache.end()) return it->second;
            const cplx v = h_trihex_series((2 * r - s) / 3, (r + s) / 3, t).value;
            cache.emplace(key, v);
            return v;
        };
        double worst = 0.0;
        for (int r = -3; r <= 3; ++r)
            for (int s = -3; s <= 3; ++s) {
                if (((r + s) % 3 + 3) % 3 != 0) continue;
                const std::array<int, 2> rs = {r, s};
                worst = std::max(
                    worst, std::abs(resolvent_identity_residual(contour, rs, t - 3.0, H)));
            }
        b.add("trihex.identity.series", "trihex", "t=12, |r|,|s|<=3 on sublattice",
              "lambda H - stencil", "delta(r,s)", worst, cfg.tol_trihex_identity);
    }

    // Lauricella reductions and the triple-sum identity
    {
        double worst = 0.0;
        // x = y = z = 0
        worst = std::max(worst,
                         std::abs(lauricella_fc3(1.0, 1.0, 1.0, 1.0, 1.0, 0.0, 0.0, 0.0)
                                      .value -
                                  1.0));
        // single-variable collapse to 2F1
        HyperParams hp;
        hp.numerator = {cplx{0.5, 0.0}, cplx{1.5, 0.0}};
        hp.denominator = {cplx{2.0, 0.0}};
        hp.argument = 0.2;
        worst = std::max(
            worst, std::abs(lauricella_fc3(0.5, 1.5, 2.0, 1.0, 1.0, 0.2, 0.0, 0.0).value -
                            pfq(hp).value));
        // F_C form of the resolvent at p = q = 0, t = 16
        const double t = 16.0;
        const cplx fc = lauricella_fc3(1.0, 1.0, 1.0, 1.0, 1.0, 1.0 / t, 1.0 / t,
                                       1.0 / t)
                            .value /
                        t;
        worst = std::max(worst, std::abs(fc - h_trihex_series(0, 0, t).value));
        b.add("trihex.lauricella_reductions", "trihex",
              "collapse to 1, 2F1, resolvent at t=16", "lauricella_fc3",
              "reference route", worst, cfg.tol_lauricella);
    }

    // Green's functions against the direct physical oracles
    {
        const LatticeSpec hex = honeycomb_lattice();
        const LatticeSpec tri = triangular_lattice();
        double worst = 0.0;
        for (double u : {4.0, 4.5, 5.0}) {
            for (auto [p, q] : std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {2, 1}}) {
                const std::array<int, 2> pq = {p, q};
                worst = std::max(worst,
                                 std::abs(green_trihex(TrihexForm::honeycomb, p, q, u) -
                                          quadrature_resolvent(hex, pq, u, 256)));
            }
            for (auto [p, q] : std::vector<std::pair<int, int>>{{0, 0}, {1, 1}, {2, 0}}) {
                const std::array<int, 2> pq = {p, q};
                worst = std::max(worst,
                                 std::abs(green_trihex(TrihexForm::triangular, p, q, u) -
                                          quadrature_resolvent(tri, pq, 2.0 * u, 256)));
            }
        }
        b.add("trihex.green_vs_oracle", "trihex", "u in {4,4.5,5}, (p,q) sample",
              "green_trihex", "quadrature_resolvent", worst, cfg.tol_trihex_green);
    }

    // correlation value and symmetry
    {
        const double c10 = correlation_trihex(1, 0);
        b.add("trihex.correlation_value", "trihex", "(p,q)=(1,0)",
              "quadrature_correlation", "-1/3", std::abs(c10 + 1.0 / 3.0),
              cfg.tol_trihex_correlation);
        const LatticeSpec hex = honeycomb_lattice();
        const std::array<int, 2> a = {2, 1}, bb = {1, 2};
        const double worst = std::abs(quadrature_correlation(hex, a, 1024) -
                                      quadrature_correlation(hex, bb, 1024));
        b.add("trihex.correlation_symmetry", "trihex", "(2,1) vs (1,2), n=1024",
              "correlation(p,q)", "correlation(q,p)", worst, cfg.tol_corr_symmetry);
    }
}

inline void run_extension_checks(SuiteBuilder& b) {
    const auto& cfg = b.cfg_;

    // BCC D=1 reduces to the chain series
    {
        double worst = 0.0;
        for (cplx t : {cplx{1.5, 0.0}, cplx{2.0, 0.0}}) {
            for (int r = 0; r <= 4; ++r) {
                const std::array<int, 1> rv = {r};
                worst = std::max(worst, std::abs(h_bcc_series(rv, t, 1).value -
                                                 h1_gamma_series(r, t).value));
            }
        }
        b.add("bcc.d1_vs_chain", "bcc", "t in {1.5,2}, r=0..4", "h_bcc_series D=1",
              "h1_gamma_series", worst, cfg.tol_bcc_d1);
    }

    // BCC D=2 is the square lattice in rotated coordinates
    {
        double worst = 0.0;
        for (cplx t : {cplx{1.5, 0.0}, cplx{3.0, 0.0}}) {
            for (int r1 = 0; r1 <= 3; ++r1)
                for (int r2 = 0; r2 <= 3; ++r2) {
                    if ((r1 - r2) % 2 != 0) continue;
                    const std::array<int, 2> rv = {r1, r2};
                    worst = std::max(worst, std::abs(h_bcc_series(rv, t, 2).value -
                                                     h2_gamma_series(r1, r2, t).value));
                }
        }
        b.add("bcc.d2_vs_square", "bcc", "t in {1.5,3}, r<=(3,3)", "h_bcc_series D=2",
              "h2_gamma_series", worst, cfg.tol_bcc_d2);
    }

    // BCC D=3 against the 64^3 oracle at t = 2
    {
        const LatticeSpec bcc3 = bcc_lattice(3);
        double worst = 0.0;
        for (const auto& rv : std::vector<std::array<int, 3>>{
                 {0, 0, 0}, {1, 1, 1}, {2, 0, 0}}) {
            worst = std::max(worst, std::abs(h_bcc_series(rv, 2.0, 3).value -
                                             quadrature_resolvent(bcc3, rv, 16.0, 64)));
        }
        b.add("bcc.d3_vs_oracle", "bcc", "t=2, 64^3 grid", "h_bcc_series D=3",
              "quadrature_resolvent", worst, cfg.tol_bcc_d3);
    }

    // mixed parity is a structural zero
    {
        double worst = 0.0;
        for (const auto& rv : std::vector<std::array<int, 3>>{
                 {1, 0, 0}, {2, 1, 0}, {3, 2, 2}}) {
            const auto ev = h_bcc_series(rv, 2.0, 3);
            worst = std::max(worst, std::abs(ev.value));
        }
        b.add("bcc.mixed_parity_zero", "bcc", "mixed-parity r, t=2", "h_bcc_series",
              "0", worst, 0.0);
    }

    // parity branch equals the series
    {
        double worst = 0.0;
        for (const auto& rv : std::vector<std::array<int, 3>>{
                 {0, 0, 0}, {2, 0, 0}, {1, 1, 1}, {3, 1, 1}}) {
            worst = std::max(worst, std::abs(h_bcc_parity_branch(rv, 2.0, 3).value -
                                             h_bcc_series(rv, 2.0, 3).value));
        }
        b.add("bcc.branch_vs_series", "bcc", "D=3, t=2", "h_bcc_parity_branch",
              "h_bcc_series", worst, cfg.tol_bcc_branch);
    }

    // resolvent identity for D in {1, 2, 3}
    {
        double worst = 0.0;
        for (int dim = 1; dim <= 3; ++dim) {
            const LatticeSpec bl = bcc_lattice(dim);
            const cplx lambda = std::ldexp(1.0, dim) * 2.0;
            auto H = [dim](std::span<const int> rv) {
                return h_bcc_series(rv, 2.0, dim).value;
            };
            std::vector<int> rv(dim, 0);
            const std::function<void(int)> sweep = [&](int d) {
                if (d == dim) {
                    worst = std::max(
                        worst, std::abs(resolvent_identity_residual(bl, rv, lambda, H)));
                    return;
                }
                for (int c = -3; c <= 3; ++c) {
                    rv[d] = c;
                    sweep(d + 1);
                }
            };
            sweep(0);
        }
        b.add("bcc.identity", "bcc", "D in {1,2,3}, t=2, |r_i|<=3",
              "lambda H - stencil", "delta(r)", worst, cfg.tol_bcc_identity);
    }

    // NNN: tau2 = 0 reduction, oracle match, identity, continuity
    {
        double worst = 0.0;
        for (double tau1 : {0.5, 0.4}) {
            for (int r = 0; r <= 3; ++r)
                worst = std::max(worst, std::abs(h_nnn_series(r, tau1, 0.0).value -
                                                 h1_closed(r, 1.0 / tau1)));
        }
        b.add("nnn.tau2_zero_reduction", "nnn", "tau1 in {0.5,0.4}, r=0..3",
              "h_nnn_series", "h1_closed(1/tau1)", worst, cfg.tol_nnn_reduction);

        worst = 0.0;
        for (int r = 0; r <= 3; ++r)
            worst = std::max(worst, std::abs(h_nnn_series(r, 0.3, 0.2).value -
                                             quadrature_resolvent_nnn(r, 0.3, 0.2, 4096)));
        b.add("nnn.vs_oracle", "nnn", "tau=(0.3,0.2), r=0..3", "h_nnn_series",
              "quadrature_resolvent_nnn", worst, cfg.tol_nnn_oracle);

        worst = 0.0;
        const double tau1 = 0.3, tau2 = 0.2;
        auto H = [&](int r) { return h_nnn_series(r, tau1, tau2).value; };
        for (int r = 0; r <= 3; ++r) {
            const cplx res = (2.0 / tau1) * H(r) - (H(r + 1) + H(r - 1)) -
                             (tau2 / tau1) * (H(r + 2) + H(r - 2)) -
                             (r == 0 ? 1.0 : 0.0);
            worst = std::max(worst, std::abs(res));
        }
        b.add("nnn.identity", "nnn", "tau=(0.3,0.2), r=0..3",
              "(2/tau1) H - stencil", "delta(r)", worst, cfg.tol_nnn_identity);

        worst = 0.0;
        for (int r = 0; r <= 3; ++r)
            worst = std::max(worst, std::abs(h_nnn_series(r, 0.5, 1e-6).value -
                                             h1_closed(r, 2.0)));
        b.add("nnn.tau2_continuity", "nnn", "tau2=1e-6 vs chain t=2, r=0..3",
              "h_nnn_series", "h1_closed", worst, cfg.tol_nnn_continuity);
    }
}

inline void run_oracle_checks(SuiteBuilder& b) {
    const auto& cfg = b.cfg_;
    const LatticeSpec sq = square_lattice();

    // spectral convergence: doubling the grid shrinks the change monotonically
    {
        const std::array<int, 2> rv = {1, 0};
        const cplx lam{4.4, 0.0};
        const cplx q16 = quadrature_resolvent(sq, rv, lam, 16);
        const cplx q32 = quadrature_resolvent(sq, rv, lam, 32);
        const cplx q64 = quadrature_resolvent(sq, rv, lam, 64);
        const cplx q128 = quadrature_resolvent(sq, rv, lam, 128);
        const double c1 = std::abs(q32 - q16), c2 = std::abs(q64 - q32),
                     c3 = std::abs(q128 - q64);
        const bool monotone = c1 > c2 && c2 > c3;
        b.add("oracle.spectral_convergence", "square", "lambda=4.4, n=16..128",
              "|Q(2n)-Q(n)| decreasing", "monotone", monotone ? 0.0 : 1.0, 0.5,
              false,
              "changes: " + std::to_string(c1) + ", " + std::to_string(c2) + ", " +
                  std::to_string(c3));
    }

    // reflection symmetry H(r) = H(-r)
    {
        const std::array<int, 2> rp = {2, 1}, rm = {-2, -1};
        const double diff = std::abs(quadrature_resolvent(sq, rp, 6.5, 256) -
                                     quadrature_resolvent(sq, rm, 6.5, 256));
        b.add("oracle.reflection_symmetry", "square", "lambda=6.5, r=(2,1)",
              "H(r)", "H(-r)", diff, 1e-13);
    }

    // identity residual with the quadrature itself as the evaluator
    {
        auto H = [&](std::span<const int> rv) {
            return quadrature_resolvent(sq, rv, 8.0, 256);
        };
        const std::array<int, 2> origin = {0, 0};
        const double diff =
            std::abs(resolvent_identity_residual(sq, origin, 8.0, H));
        b.add("oracle.identity_quadrature", "square", "lambda=8, origin",
              "lambda H - stencil", "1", diff, 1e-9);
    }

    (void)cfg;
}

inline void run_calibration_checks(SuiteBuilder& b) {
    const auto& cfg = b.cfg_;
    for (const std::string family :
         {"chain1d", "square", "trihex-honeycomb", "trihex-triangular"}) {
        std::vector<cplx> ts;
        std::vector<std::array<int, 2>> idx;
        default_calibration_samples(family, ts, idx);
        const auto rep = calibrate_prefactor(family, ts, idx);
        b.add("calibration." + family + ".spread", family,
              "default sample grid", "oracle / series ratio spread", "0",
              rep.relative_spread, cfg.tol_calibration_spread, false,
              "fitted constant " + fmt_cplx(rep.constant));
        if (family == "chain1d") {
            b.add("calibration.chain1d.unit", "chain1d", "default sample grid",
                  "fitted constant", "1", std::abs(rep.constant - 1.0),
                  cfg.tol_calibration_chain);
        } else {
            // comparison against the literature constant is experimental
            const double diff = std::abs(rep.constant - rep.reference_constant);
            b.add("paper." + family + ".constant", family, "default sample grid",
                  "fitted constant " + fmt_cplx(rep.constant),
                  "literature " + fmt_cplx(rep.reference_constant), diff,
                  1e-6 * std::max(1.0, std::abs(rep.reference_constant)), true,
                  rep.reference_note);
            if (diff > 1e-6)
                b.finding("calibration " + family + ": measured constant " +
                          fmt_cplx(rep.constant) + " differs from the literature value " +
                          fmt_cplx(rep.reference_constant) + " (" + rep.reference_note +
                          ")");
        }
    }
}

inline void run_paper_discrepancy_checks(SuiteBuilder& b) {
    // 1. unrestricted chain sum (both parities) against the closed form
    {
        const cplx t{2.0, 0.0};
        const int r = 0;
        KahanSum sum;
        for (int n = 0; n < 200; ++n) {
            const cplx coef = gamma_ratio({1.0 + n}, {1.0 + (n + r) / 2.0,
                                                      1.0 + (n - r) / 2.0});
            sum.add(coef * std::pow(1.0 / (2.0 * t), 1.0 + n));
        }
        const double diff = std::abs(sum.value() - h1_closed(r, t));
        b.add("paper.chain_unrestricted_sum", "chain1d", "r=0, t=2",
              "n-sum over both parities", "h1_closed", diff, 1e-10, true,
              "spurious opposite-parity terms shift the value by about 1/(pi t^2)");
        if (diff > 1e-10)
            b.finding(
                "chain1d: the split two-branch form with both parities retained "
                "disagrees with the closed form (difference " + std::to_string(diff) +
                " at r=0, t=2); integer indices admit only the parity-matched "
                "branch, which the evaluators enforce");
    }

    // 2. the 4F3 prefactor variant (1/2t)^{1+r}
    {
        const cplx t{2.0, 0.0};
        HyperParams hp;
        hp.numerator = {1.0, 1.0, 0.5, 0.5};
        hp.denominator = {1.0, 1.0, 1.0};
        hp.argument = 1.0 / (t * t);
        const cplx variant = pfq(hp).value / (2.0 * t);
        const double diff = std::abs(variant - h2_gamma_series(0, 0, t).value);
        b.add("paper.square_4f3_prefactor", "square", "(r,s)=(0,0), t=2",
              "(1/2t)^{1+r} 4F3 variant", "h2_gamma_series", diff, 1e-9, true,
              "the duplication-formula derivation gives (1/4t)^{1+r}; the variant "
              "is larger by 2^{1+r}");
        if (diff > 1e-9)
            b.finding(
                "square: the 4F3 representation requires prefactor (1/4t)^{1+r}; "
                "the (1/2t)^{1+r} variant is larger by 2^{1+r} and matches neither "
                "the residue series nor the oracle");
    }

    // 3. log coefficient against the -1/(2 pi) claim
    {
        const cplx measured = log_coefficient(0, 0);
        const double claim = -1.0 / (2.0 * std::numbers::pi) * square_green_constant;
        const double diff = std::abs(measured - claim);
        b.add("paper.square_log_coefficient", "square", "(p,q)=(0,0)",
              "fitted c_log " + fmt_cplx(measured), "-1/(2 pi) c_sq", diff, 1e-4,
              true,
              "measured coefficient is -1/(4 pi) c_sq; the -1/(2 pi) value stems "
              "from a 2x-inflated elliptic identification");
        if (diff > 1e-4)
            b.finding(
                "square: the measured coefficient of ln(delta) near t=1 is "
                "-1/(4 pi) times the calibrated constant (fit " + fmt_cplx(measured) +
                "), not -1/(2 pi); the latter matches the 2x-inflated closed form");
    }

    // 4. continuation coefficients as printed
    {
        std::string note;
        double diff = 1.0;
        try {
            const auto coeffs = buhring_coefficients(0, 0, 0);
            const cplx c_log_route =
                -(coeffs[0].a + coeffs[0].a_prime) / (4.0 * std::numbers::pi);
            diff = std::abs(c_log_route - cplx{-1.0 / (2.0 * std::numbers::pi), 0.0});
            note = "-(A_0+A'_0)/(4 pi) = " + fmt_cplx(c_log_route);
        } catch (const std::exception& e) {
            note = std::string("evaluation failed: ") + e.what();
        }
        b.add("paper.square_continuation_constant", "square", "(r,s)=(0,0), k=0",
              "-(A_0+A'_0)/(4 pi)", "-1/(2 pi)", diff, 1e-3, true, note);
        if (diff > 1e-3)
            b.finding(
                "square: the printed continuation coefficients give "
                "-(A_0+A'_0)/(4 pi) inconsistent with both the -1/(2 pi) claim and "
                "the measured -1/(4 pi) (" + note + ")");
    }
}

}  // namespace detail

/// Executes every cross-representation, oracle, identity, correlation, and
/// calibration check of the library, plus the documented-discrepancy checks
/// (experimental).  Deterministic for a fixed config.
inline ValidationReport run_identity_suite(const ValidationConfig& cfg = {}) {
    detail::SuiteBuilder b(cfg);
    detail::run_chain_checks(b);
    detail::run_square_checks(b);
    detail::run_trihex_checks(b);
    detail::run_extension_checks(b);
    detail::run_oracle_checks(b);
    detail::run_calibration_checks(b);
    detail::run_paper_discrepancy_checks(b);
    return std::move(b).take();
}

}  // namespace lgf

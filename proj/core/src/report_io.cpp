#include "fnkgs/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace fnkgs {

namespace {

using nlohmann::json;

std::ofstream open_out(const std::string& path) {
    std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    return out;
}

std::string fmt_fixed(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string fmt_rate(double v) {
    if (std::isnan(v)) return "-";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

double emitted_value(double v) {
    return std::strtod(fmt_sci(v).c_str(), nullptr);
}

std::string failure_name(FailureKind k) {
    switch (k) {
        case FailureKind::none: return "none";
        case FailureKind::non_convergence: return "non_convergence";
        case FailureKind::divergence: return "divergence";
        case FailureKind::overflow: return "overflow";
        case FailureKind::amplitude: return "amplitude";
    }
    return "unknown";
}

}  // namespace

std::string fmt_sci(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6e", v);
    return buf;
}

void write_invariants_csv(const std::string& path, const RunResult& result) {
    std::ofstream out = open_out(path);
    out << "t,mass,energy,rm,re,iters\n";
    for (const auto& s : result.invariants) {
        out << fmt_sci(s.t) << ',' << fmt_sci(s.mass) << ',' << fmt_sci(s.energy) << ','
            << fmt_sci(s.rm) << ',' << fmt_sci(s.re) << ',' << s.iterations << '\n';
    }
}

void write_snapshots(const std::string& out_dir, const RunResult& result) {
    for (const auto& snap : result.snapshots) {
        std::string path = out_dir + "/snapshots/" + fmt_fixed(snap.t) + ".csv";
        std::ofstream out = open_out(path);
        out << "x,re_u,im_u,abs_u,phi\n";
        for (size_t j = 0; j < snap.x.size(); ++j) {
            out << fmt_sci(snap.x[j]) << ',' << fmt_sci(snap.u(j).real()) << ','
                << fmt_sci(snap.u(j).imag()) << ',' << fmt_sci(std::abs(snap.u(j))) << ','
                << fmt_sci(snap.phi(j)) << '\n';
        }
    }
}

void write_convergence_csv(const std::string& path, const ConvergenceTable& table) {
    std::ofstream out = open_out(path);
    bool time_sweep = table.sweep == SweepKind::time;
    out << (time_sweep ? "tau" : "n");
    out << ",err_u_l2";
    if (table.has_rates) out << ",rate_u";
    out << ",err_phi_l2";
    if (table.has_rates) out << ",rate_phi";
    out << ",err_phi_linf";
    if (table.has_rates) out << ",rate_linf";
    out << ",cpu_seconds\n";

    // Rates are recomputed from the values as they appear in the file, so a
    // reader applying the rate formula to the printed errors reproduces the
    // printed rates digit for digit.
    std::vector<double> steps, eu, ep, ei;
    if (table.has_rates) {
        for (const auto& r : table.rows) {
            steps.push_back(emitted_value(r.tau));
            eu.push_back(emitted_value(r.err_u_l2));
            ep.push_back(emitted_value(r.err_phi_l2));
            ei.push_back(emitted_value(r.err_phi_linf));
        }
        eu = convergence_rate(eu, steps);
        ep = convergence_rate(ep, steps);
        ei = convergence_rate(ei, steps);
    }

    for (size_t i = 0; i < table.rows.size(); ++i) {
        const auto& r = table.rows[i];
        if (time_sweep)
            out << fmt_sci(r.tau);
        else
            out << r.N;
        out << ',' << fmt_sci(r.err_u_l2);
        if (table.has_rates) out << ',' << fmt_rate(eu[i]);
        out << ',' << fmt_sci(r.err_phi_l2);
        if (table.has_rates) out << ',' << fmt_rate(ep[i]);
        out << ',' << fmt_sci(r.err_phi_linf);
        if (table.has_rates) out << ',' << fmt_rate(ei[i]);
        out << ',' << fmt_sci(r.cpu_seconds) << '\n';
    }
}

void write_compare_csv(const std::string& path, const std::vector<CompareRow>& rows) {
    std::ofstream out = open_out(path);
    out << "tau,cn_err,cn_cpu_seconds,cn_seconds_per_step,"
           "esav_err,esav_cpu_seconds,esav_seconds_per_step\n";
    for (const auto& r : rows) {
        out << fmt_sci(r.tau) << ',' << fmt_sci(r.cn_err) << ',' << fmt_sci(r.cn_cpu_seconds)
            << ',' << fmt_sci(r.cn_seconds_per_step) << ',' << fmt_sci(r.esav_err) << ','
            << fmt_sci(r.esav_cpu_seconds) << ',' << fmt_sci(r.esav_seconds_per_step) << '\n';
    }
}

void write_summary_json(const std::string& path, const ProblemSpec& prob,
                        const RunConfig& cfg, const RunResult& result) {
    json j;
    j["scheme"] = scheme_name(cfg.scheme);
    j["problem"] = {{"name", prob.name},
                    {"alpha", prob.alpha},
                    {"lambda", prob.lambda},
                    {"kappa1", prob.kappa1},
                    {"kappa2", prob.kappa2},
                    {"gamma", prob.gamma},
                    {"eta", prob.eta},
                    {"domain", {prob.map.a, prob.map.b}}};
    j["config"] = {{"tau", cfg.tau},
                   {"N", cfg.N},
                   {"T", cfg.T},
                   {"tol", cfg.tol},
                   {"max_iter", cfg.max_iter},
                   {"init", cfg.init == InitMode::b_proj ? "b_proj" : "l2"},
                   {"mu_factor", cfg.mu_factor},
                   {"sample_every", cfg.sample_every}};

    double max_rm = 0.0, max_re = 0.0;
    for (const auto& s : result.invariants) {
        max_rm = std::max(max_rm, s.rm);
        max_re = std::max(max_re, s.re);
    }
    j["result"] = {{"steps_taken", result.steps_taken},
                   {"final_t", result.final_state.t},
                   {"cpu_seconds", result.cpu_seconds},
                   {"assembly_seconds", result.assembly_seconds},
                   {"max_iterations", result.max_iterations},
                   {"max_rm", max_rm},
                   {"max_re", max_re}};
    if (result.blowup) {
        j["blowup"] = {{"t", result.blowup->t},
                       {"kind", failure_name(result.blowup->kind)},
                       {"detail", result.blowup->detail}};
    } else {
        j["blowup"] = nullptr;
    }

    std::ofstream out = open_out(path);
    out << j.dump(2) << '\n';
}

}  // namespace fnkgs

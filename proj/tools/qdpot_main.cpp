#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qdpot/io.hpp"
#include "qdpot/verify.hpp"

namespace {

using qdpot::cplx;
using json = nlohmann::json;

cplx parse_anchor(const std::string& text) {
    auto comma = text.find(',');
    try {
        if (comma == std::string::npos) return cplx(std::stod(text), 0.0);
        return cplx(std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1)));
    } catch (const std::exception&) {
        throw qdpot::error(qdpot::errc::parse, "anchor must be re or re,im");
    }
}

struct Job {
    std::string domain_path;
    std::string data_path;
    std::string anchor_text = "0";
    int samples = 256;
    std::string out_path;
    double tol = 0.0;  // 0 = library defaults
    bool as_json = false;
    bool direct = false;
};

json span_to_json(const qdpot::SpanElement& span, const qdpot::QuadDomain& dom) {
    json arr = json::array();
    for (const auto& t : span.terms) {
        const char* kind = "";
        switch (t.element.kind) {
            case qdpot::KernelKind::szego: kind = "S"; break;
            case qdpot::KernelKind::garabedian: kind = "L"; break;
            case qdpot::KernelKind::bergman: kind = "B"; break;
            case qdpot::KernelKind::lambda: kind = "Lambda"; break;
        }
        cplx z = dom.map()(t.element.param);
        arr.push_back({{"kind", kind},
                       {"order", t.element.order},
                       {"param_disc", {t.element.param.real(), t.element.param.imag()}},
                       {"param_z", {z.real(), z.imag()}},
                       {"coeff", {t.coefficient.real(), t.coefficient.imag()}}});
    }
    return arr;
}

void print_span(const std::string& title, const qdpot::SpanElement& span,
                const qdpot::QuadDomain& dom) {
    std::cout << title << " (" << span.terms.size() << " terms)\n";
    for (const auto& t : span.terms) {
        const char* kind = "";
        switch (t.element.kind) {
            case qdpot::KernelKind::szego: kind = "S"; break;
            case qdpot::KernelKind::garabedian: kind = "L"; break;
            case qdpot::KernelKind::bergman: kind = "B"; break;
            case qdpot::KernelKind::lambda: kind = "Lambda"; break;
        }
        cplx z = dom.map()(t.element.param);
        std::cout << "  " << kind << "^" << t.element.order
                  << "  v = " << qdpot::io::format_complex(t.element.param)
                  << "  z = " << qdpot::io::format_complex(z)
                  << "  coeff = " << qdpot::io::format_complex(t.coefficient) << "\n";
    }
}

qdpot::QuadDomain load_domain(const Job& job) {
    if (job.domain_path.empty())
        throw qdpot::error(qdpot::errc::parse, "--domain is required");
    auto file = qdpot::io::load_domain_file(job.domain_path);
    return qdpot::QuadDomain::make(file.map, file.witness);
}

qdpot::BiRational load_data(const Job& job) {
    if (job.data_path.empty())
        throw qdpot::error(qdpot::errc::parse, "--data is required for this command");
    return qdpot::io::load_boundary_file(job.data_path);
}

qdpot::DecompOptions decomp_opts(const Job& job) {
    qdpot::DecompOptions opts;
    opts.samples = job.samples;
    if (job.tol > 0.0) opts.residual_tol = job.tol;
    return opts;
}

double dirichlet_oracle_residual(const qdpot::QuadDomain& dom, const qdpot::HarmonicRep& rep,
                                 int samples) {
    auto bs = qdpot::oracle::BoundarySamples::from_fn(
        std::max(samples, 256),
        [&](double th) { return rep.boundary_value(std::polar(1.0, th)); });
    double sup = 0.0;
    for (const auto& v : bs.values) sup = std::max(sup, std::abs(v));
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
        cplx v = std::polar(0.04 * k, 0.7 * k);
        cplx mine = harmonic_eval(rep, dom, v);
        worst = std::max(worst, std::abs(mine - qdpot::oracle::poisson_disc(bs, v)) / (1.0 + sup));
    }
    return worst;
}

int run_validate(const Job& job) {
    if (job.domain_path.empty())
        throw qdpot::error(qdpot::errc::parse, "--domain is required");
    auto file = qdpot::io::load_domain_file(job.domain_path);
    auto dom = qdpot::QuadDomain::make(file.map, file.witness);
    auto nodes = dom.quadrature_data().nodes;
    if (job.as_json) {
        json j{{"name", file.name},
               {"area_quadrature_domain", true},
               {"double_witness", dom.is_double()},
               {"even_multiplicity_hint", dom.even_multiplicity_hint()},
               {"boundary_scale", dom.boundary_scale()}};
        json narr = json::array();
        for (const auto& n : nodes)
            narr.push_back({{"point", {n.point.real(), n.point.imag()}},
                            {"order", n.order},
                            {"coeff", {n.coefficient.real(), n.coefficient.imag()}}});
        j["quadrature_nodes"] = narr;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "domain: " << file.name << "\n";
    std::cout << "area QD: yes (validated: analytic closure, f' nonvanishing, univalent)\n";
    if (dom.is_double())
        std::cout << "double witness: valid (q^2 = f')\n";
    else
        std::cout << "double witness: absent"
                  << (dom.even_multiplicity_hint()
                          ? "; hint: f' has even-multiplicity zero/pole structure,"
                            " a rational square root may exist"
                          : "")
                  << "\n";
    std::cout << "quadrature identity: integral_Omega h dA = sum c_km h^(m)(a_k) with nodes\n";
    for (const auto& n : nodes)
        std::cout << "  a = " << qdpot::io::format_complex(n.point) << "  m = " << n.order
                  << "  c = " << qdpot::io::format_complex(n.coefficient) << "\n";
    return 0;
}

int run_solve_dirichlet(const Job& job) {
    auto dom = load_domain(job);
    auto data = load_data(job);
    cplx anchor = parse_anchor(job.anchor_text);
    auto rep = qdpot::dirichlet_solve(dom, anchor, data, decomp_opts(job));
    double oracle_res = dirichlet_oracle_residual(dom, rep, job.samples);
    cplx u0 = qdpot::harmonic_eval(rep, dom, cplx(0.0));
    auto dec = qdpot::basic_decomposition(dom, anchor, data, decomp_opts(job));
    if (job.as_json) {
        json j{{"u_at_center", {u0.real(), u0.imag()}},
               {"oracle_residual", oracle_res},
               {"decomposition_residual", dec.residual},
               {"szego_terms", span_to_json(dec.szego_terms, dom)},
               {"garabedian_terms", span_to_json(dec.garabedian_terms, dom)}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "dirichlet solution u = h + conj(H)\n";
        std::cout << "u(f(0)) = " << qdpot::io::format_complex(u0) << "\n";
        print_span("szego terms", dec.szego_terms, dom);
        print_span("garabedian terms", dec.garabedian_terms, dom);
        std::cout << "decomposition residual: " << dec.residual << "\n";
        std::cout << "poisson oracle residual: " << oracle_res << "\n";
    }
    if (!job.out_path.empty()) {
        qdpot::io::write_boundary_csv(job.out_path + "_boundary.csv", dom, rep, job.samples);
        qdpot::io::write_interior_csv(job.out_path + "_interior.csv", dom, rep, job.samples, 16);
    }
    return 0;
}

int run_dtn(const Job& job) {
    auto dom = load_domain(job);
    auto data = load_data(job);
    cplx anchor = parse_anchor(job.anchor_text);
    auto res = qdpot::dtn_map(dom, anchor, data, decomp_opts(job));
    double sup = 0.0;
    for (int k = 0; k < job.samples; ++k) {
        double th = 2.0 * std::numbers::pi * k / job.samples;
        sup = std::max(sup, std::abs(res.normal_derivative(th)));
    }
    if (job.as_json) {
        json j{{"sup_normal_derivative", sup}, {"rational_trace", res.rational_trace.has_value()}};
        if (res.rational_trace) {
            json num = json::array(), den = json::array();
            for (const auto& c : res.rational_trace->numer().coeffs())
                num.push_back({c.real(), c.imag()});
            for (const auto& c : res.rational_trace->denom().coeffs())
                den.push_back({c.real(), c.imag()});
            j["trace_numer"] = num;
            j["trace_denom"] = den;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "d-to-n boundary function: sup |psi| = " << sup << " over " << job.samples
                  << " samples\n";
        if (res.rational_trace) {
            std::cout << "rational trace in w: numer degree "
                      << res.rational_trace->numer().degree() << ", denom degree "
                      << res.rational_trace->denom().degree() << "\n";
        } else {
            std::cout << "no rational trace (domain has no double-quadrature witness)\n";
        }
    }
    if (!job.out_path.empty()) {
        std::ofstream out(job.out_path);
        if (!out) throw qdpot::error(qdpot::errc::parse, "cannot write file: " + job.out_path);
        out.precision(17);
        out << "theta,re_z,im_z,re_value,im_value,re_tangent,im_tangent,speed\n";
        for (int k = 0; k < job.samples; ++k) {
            double th = 2.0 * std::numbers::pi * k / job.samples;
            auto fr = dom.frame(th);
            cplx val = res.normal_derivative(th);
            out << th << ',' << fr.z.real() << ',' << fr.z.imag() << ',' << val.real() << ','
                << val.imag() << ',' << fr.tangent.real() << ',' << fr.tangent.imag() << ','
                << fr.speed << '\n';
        }
    }
    return 0;
}

int run_solve_neumann(const Job& job) {
    auto dom = load_domain(job);
    auto data = load_data(job);
    auto psi = qdpot::pullback_boundary_data(dom, data);
    auto rep = qdpot::neumann_solve(dom, psi);
    cplx u0 = qdpot::harmonic_eval(rep, dom, cplx(0.0));
    auto back = qdpot::dtn_map(dom, rep);
    double worst = 0.0;
    for (int k = 0; k < job.samples; ++k) {
        double th = 2.0 * std::numbers::pi * k / job.samples;
        worst = std::max(worst, std::abs(back.normal_derivative(th) - psi(std::polar(1.0, th))));
    }
    if (job.as_json) {
        json j{{"u_at_center", {u0.real(), u0.imag()}},
               {"dtn_round_trip_residual", worst}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "neumann solution (gauge: u(f(0)) = 0)\n";
        std::cout << "u(f(0)) = " << qdpot::io::format_complex(u0) << "\n";
        std::cout << "d-to-n round trip residual: " << worst << "\n";
    }
    if (!job.out_path.empty()) {
        qdpot::io::write_boundary_csv(job.out_path + "_boundary.csv", dom, rep, job.samples);
        qdpot::io::write_interior_csv(job.out_path + "_interior.csv", dom, rep, job.samples, 16);
    }
    return 0;
}

int run_decompose(const Job& job) {
    auto dom = load_domain(job);
    auto data = load_data(job);
    cplx anchor = parse_anchor(job.anchor_text);
    auto dec = qdpot::basic_decomposition(dom, anchor, data, decomp_opts(job));
    if (job.as_json) {
        json j{{"anchor", {anchor.real(), anchor.imag()}},
               {"residual", dec.residual},
               {"szego_terms", span_to_json(dec.szego_terms, dom)},
               {"garabedian_terms", span_to_json(dec.garabedian_terms, dom)}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "basic decomposition of S_a R on the boundary, anchor v = "
                  << qdpot::io::format_complex(anchor) << "\n";
        print_span("szego terms", dec.szego_terms, dom);
        print_span("garabedian terms", dec.garabedian_terms, dom);
        std::cout << "boundary residual: " << dec.residual << "\n";
    }
    return 0;
}

int run_project(const Job& job) {
    auto dom = load_domain(job);
    auto data = load_data(job);
    cplx anchor = parse_anchor(job.anchor_text);
    qdpot::SpanElement span = job.direct
                                  ? qdpot::szego_project_direct(dom, anchor, data, decomp_opts(job))
                                  : qdpot::szego_project(dom, anchor, data, decomp_opts(job));
    if (job.as_json) {
        json j{{"direct", job.direct}, {"projection", span_to_json(span, dom)}};
        std::cout << j.dump(2) << "\n";
    } else {
        print_span(job.direct ? "szego projection of R" : "szego projection of S_a R", span, dom);
    }
    return 0;
}

int run_verify(const Job& job) {
    auto dom = load_domain(job);
    qdpot::verify::Options opts;
    opts.samples = job.samples;
    auto results = qdpot::verify::run_all(dom, opts);
    bool all = true;
    json jarr = json::array();
    for (const auto& r : results) {
        all = all && r.pass;
        if (job.as_json) {
            jarr.push_back({{"name", r.name}, {"pass", r.pass}, {"value", r.value}, {"bound", r.bound}});
        } else {
            std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << "  (" << r.value
                      << " <= " << r.bound << ")\n";
        }
    }
    if (job.as_json) std::cout << json{{"pass", all}, {"checks", jarr}}.dump(2) << "\n";
    if (!all) throw qdpot::error(qdpot::errc::residual, "verification failed");
    return 0;
}

int run_sample(const Job& job) {
    auto dom = load_domain(job);
    auto data = load_data(job);
    cplx anchor = parse_anchor(job.anchor_text);
    auto rep = qdpot::dirichlet_solve(dom, anchor, data, decomp_opts(job));
    if (job.out_path.empty())
        throw qdpot::error(qdpot::errc::parse, "--out is required for sample");
    qdpot::io::write_boundary_csv(job.out_path + "_boundary.csv", dom, rep, job.samples);
    qdpot::io::write_interior_csv(job.out_path + "_interior.csv", dom, rep, job.samples, 16);
    if (!job.as_json)
        std::cout << "wrote " << job.out_path << "_boundary.csv and " << job.out_path
                  << "_interior.csv\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"closed-form Dirichlet / Neumann / D-to-N solver on quadrature domains"};
    app.require_subcommand(1);

    Job job;
    std::string command;
    auto add_common = [&](CLI::App* sub, bool with_data) {
        sub->add_option("--domain", job.domain_path, "domain file (JSON)");
        if (with_data) sub->add_option("--data", job.data_path, "boundary data file (JSON)");
        sub->add_option("--anchor", job.anchor_text, "anchor disc parameter re,im (default 0)");
        sub->add_option("--samples", job.samples, "boundary sample count (power of two in [64, 8192])")
            ->check(CLI::Range(64, 8192));
        sub->add_option("--out", job.out_path, "output path / prefix for CSV export");
        sub->add_option("--tol", job.tol, "override the residual tolerance");
        sub->add_flag("--json", job.as_json, "machine-readable report");
        sub->callback([&, name = sub->get_name()] { command = name; });
    };

    add_common(app.add_subcommand("validate", "validate a domain file"), false);
    add_common(app.add_subcommand("solve-dirichlet", "solve the Dirichlet problem"), true);
    add_common(app.add_subcommand("dtn", "Dirichlet-to-Neumann map of the data"), true);
    add_common(app.add_subcommand("solve-neumann", "solve the Neumann problem"), true);
    add_common(app.add_subcommand("decompose", "basic decomposition of S_a R"), true);
    auto* proj = app.add_subcommand("project", "Szego projection");
    add_common(proj, true);
    proj->add_flag("--direct", job.direct,
                   "project R itself (double quadrature domains only)");
    add_common(app.add_subcommand("verify", "run the invariant suite on a domain"), false);
    add_common(app.add_subcommand("sample", "solve and export CSV fields"), true);

    CLI11_PARSE(app, argc, argv);

    try {
        if ((job.samples & (job.samples - 1)) != 0)
            throw qdpot::error(qdpot::errc::parse, "--samples must be a power of two");
        cplx anchor = parse_anchor(job.anchor_text);
        if (std::abs(anchor) >= 1.0)
            throw qdpot::error(qdpot::errc::parse, "--anchor must lie strictly inside the unit disc");
        if (command == "validate") return run_validate(job);
        if (command == "solve-dirichlet") return run_solve_dirichlet(job);
        if (command == "dtn") return run_dtn(job);
        if (command == "solve-neumann") return run_solve_neumann(job);
        if (command == "decompose") return run_decompose(job);
        if (command == "project") return run_project(job);
        if (command == "verify") return run_verify(job);
        if (command == "sample") return run_sample(job);
        std::cerr << "error: unknown command\n";
        return 1;
    } catch (const qdpot::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

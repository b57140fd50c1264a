#include "qdpot/io.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

namespace qdpot {
namespace io {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error(errc::parse, "cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

cplx parse_pair(const json& j, const std::string& field, std::size_t index) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw error(errc::parse,
                    field + "[" + std::to_string(index) + "] must be a [re, im] pair");
    return cplx(j[0].get<double>(), j[1].get<double>());
}

Poly parse_coeff_array(const json& j, const std::string& field) {
    if (!j.is_array() || j.empty())
        throw error(errc::parse, field + " must be a non-empty array of [re, im] pairs");
    std::vector<cplx> c(j.size());
    for (std::size_t k = 0; k < j.size(); ++k) c[k] = parse_pair(j[k], field, k);
    return Poly(std::move(c));
}

BiRational::CoeffMatrix parse_coeff_matrix(const json& j, const std::string& field) {
    if (!j.is_array() || j.empty())
        throw error(errc::parse, field + " must be a non-empty nested array");
    BiRational::CoeffMatrix m(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& row = j[i];
        if (!row.is_array() || row.empty())
            throw error(errc::parse,
                        field + "[" + std::to_string(i) + "] must be a non-empty array");
        m[i].resize(row.size());
        for (std::size_t k = 0; k < row.size(); ++k)
            m[i][k] = parse_pair(row[k], field + "[" + std::to_string(i) + "]", k);
    }
    return m;
}

json parse_object(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw error(errc::parse, "invalid JSON");
    if (!j.is_object()) throw error(errc::parse, "top-level value must be an object");
    return j;
}

}  // namespace

DomainFile parse_domain_json(const std::string& text) {
    json j = parse_object(text);
    DomainFile out;
    out.name = j.value("name", std::string("unnamed"));
    if (!j.contains("map_numer")) throw error(errc::parse, "missing field map_numer");
    if (!j.contains("map_denom")) throw error(errc::parse, "missing field map_denom");
    Poly num = parse_coeff_array(j["map_numer"], "map_numer");
    Poly den = parse_coeff_array(j["map_denom"], "map_denom");
    if (den.is_zero()) throw error(errc::parse, "map_denom is identically zero");
    out.map = RationalFn(std::move(num), std::move(den));

    const bool has_wn = j.contains("double_witness_numer");
    const bool has_wd = j.contains("double_witness_denom");
    if (has_wn != has_wd)
        throw error(errc::parse,
                    "double_witness_numer and double_witness_denom must be given together");
    if (has_wn) {
        Poly wn = parse_coeff_array(j["double_witness_numer"], "double_witness_numer");
        Poly wd = parse_coeff_array(j["double_witness_denom"], "double_witness_denom");
        if (wd.is_zero()) throw error(errc::parse, "double_witness_denom is identically zero");
        out.witness = RationalFn(std::move(wn), std::move(wd));
    }
    return out;
}

DomainFile load_domain_file(const std::string& path) {
    try {
        return parse_domain_json(read_file(path));
    } catch (const error& e) {
        if (e.code() == errc::parse)
            throw error(errc::parse, path + ": " + e.what());
        throw;
    }
}

BiRational parse_boundary_json(const std::string& text) {
    json j = parse_object(text);
    if (!j.contains("numer_coeffs")) throw error(errc::parse, "missing field numer_coeffs");
    if (!j.contains("denom_coeffs")) throw error(errc::parse, "missing field denom_coeffs");
    return BiRational(parse_coeff_matrix(j["numer_coeffs"], "numer_coeffs"),
                      parse_coeff_matrix(j["denom_coeffs"], "denom_coeffs"));
}

BiRational load_boundary_file(const std::string& path) {
    try {
        return parse_boundary_json(read_file(path));
    } catch (const error& e) {
        if (e.code() == errc::parse)
            throw error(errc::parse, path + ": " + e.what());
        throw;
    }
}

std::string format_complex(cplx v) {
    std::ostringstream ss;
    ss.precision(12);
    ss << v.real();
    if (v.imag() >= 0.0)
        ss << "+" << v.imag() << "i";
    else
        ss << "-" << -v.imag() << "i";
    return ss.str();
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw error(errc::parse, "cannot write file: " + path);
    out.precision(17);
    return out;
}

}  // namespace

void write_boundary_csv(const std::string& path, const QuadDomain& dom,
                        const HarmonicRep& rep, int samples) {
    auto out = open_out(path);
    out << "theta,re_z,im_z,re_value,im_value,re_tangent,im_tangent,speed\n";
    for (int k = 0; k < samples; ++k) {
        double theta = 2.0 * std::numbers::pi * k / samples;
        auto fr = dom.frame(theta);
        cplx val = rep.boundary_value(fr.w);
        out << theta << ',' << fr.z.real() << ',' << fr.z.imag() << ',' << val.real() << ','
            << val.imag() << ',' << fr.tangent.real() << ',' << fr.tangent.imag() << ','
            << fr.speed << '\n';
    }
}

void write_interior_csv(const std::string& path, const QuadDomain& dom,
                        const HarmonicRep& rep, int ntheta, int nr) {
    auto out = open_out(path);
    out << "re_z,im_z,re_u,im_u\n";
    for (int it = 0; it < ntheta; ++it) {
        double theta = 2.0 * std::numbers::pi * it / ntheta;
        for (int ir = 0; ir < nr; ++ir) {
            double r = (ir + 0.5) / nr;
            cplx v = r * cplx(std::cos(theta), std::sin(theta));
            cplx z = dom.map()(v);
            cplx u = harmonic_eval(rep, dom, v);
            out << z.real() << ',' << z.imag() << ',' << u.real() << ',' << u.imag() << '\n';
        }
    }
}

}  // namespace io
}  // namespace qdpot

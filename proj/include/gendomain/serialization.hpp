#ifndef GENDOMAIN_SERIALIZATION_HPP
#define GENDOMAIN_SERIALIZATION_HPP

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "gendomain/convergence.hpp"
#include "gendomain/recovery.hpp"

namespace gendomain {

using nlohmann::json;

// ---------------------------------------------------------------------------
// JSON helpers
// ---------------------------------------------------------------------------

inline json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw InvalidSpec("complex value must be [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

// ---------------------------------------------------------------------------
// DomainSpec
// ---------------------------------------------------------------------------

inline json to_json(const DomainSpec& spec) {
    json j;
    if (const auto* b = std::get_if<BoxShape>(&spec.shape())) {
        j["shape"] = "box";
        j["halfwidths"] = b->halfwidths;
    } else if (const auto* c = std::get_if<DiscShape>(&spec.shape())) {
        j["shape"] = "disc";
        j["center"] = c->center;
        j["radius"] = c->radius;
    } else if (const auto* t = std::get_if<TriangleShape>(&spec.shape())) {
        j["shape"] = "triangle";
        j["vertices"] = {{t->vertices[0][0], t->vertices[0][1]},
                         {t->vertices[1][0], t->vertices[1][1]},
                         {t->vertices[2][0], t->vertices[2][1]}};
    } else {
        const auto& m = std::get<MaskShape>(spec.shape());
        j["shape"] = "mask";
        j["points"] = m.points;
    }
    return j;
}

inline DomainSpec domain_spec_from_json(const json& j) {
    std::string shape = j.at("shape").get<std::string>();
    if (shape == "box")
        return DomainSpec::box(j.at("halfwidths").get<std::vector<double>>());
    if (shape == "disc")
        return DomainSpec::disc(j.at("center").get<std::vector<double>>(),
                                j.at("radius").get<double>());
    if (shape == "triangle") {
        auto v = j.at("vertices").get<std::vector<std::vector<double>>>();
        if (v.size() != 3 || v[0].size() != 2 || v[1].size() != 2 || v[2].size() != 2)
            throw InvalidSpec("triangle needs three 2D vertices");
        return DomainSpec::triangle({{{v[0][0], v[0][1]}, {v[1][0], v[1][1]}, {v[2][0], v[2][1]}}});
    }
    if (shape == "mask")
        return DomainSpec::mask(j.at("points").get<std::vector<IntVec>>());
    throw InvalidSpec("unknown shape: " + shape);
}

// ---------------------------------------------------------------------------
// Symbols
// ---------------------------------------------------------------------------

inline json to_json(const ExpSum& s) {
    json terms = json::array();
    for (const auto& t : s.terms()) {
        json zeta = json::array();
        for (const auto& z : t.zeta)
            zeta.push_back(complex_to_json(z));
        terms.push_back({{"c", complex_to_json(t.coeff)}, {"zeta", zeta}});
    }
    return {{"type", "expsum"}, {"dimension", s.dimension()}, {"terms", terms}};
}

inline json to_json(const ExpPoly& s) {
    json terms = json::array();
    for (const auto& t : s.terms()) {
        json monomials = json::array();
        for (const auto& [alpha, c] : t.poly)
            monomials.push_back({{"alpha", alpha}, {"c", complex_to_json(c)}});
        json zeta = json::array();
        for (const auto& z : t.zeta)
            zeta.push_back(complex_to_json(z));
        terms.push_back({{"monomials", monomials}, {"zeta", zeta}});
    }
    return {{"type", "exppoly"}, {"dimension", s.dimension()}, {"terms", terms}};
}

inline json to_json(const Symbol& s) {
    return std::visit([](const auto& x) { return to_json(x); }, s);
}

inline Symbol symbol_from_json(const json& j) {
    std::string type = j.at("type").get<std::string>();
    int dim = j.at("dimension").get<int>();
    if (type == "expsum") {
        std::vector<ExpTerm> terms;
        for (const auto& t : j.at("terms")) {
            ExpTerm term;
            term.coeff = complex_from_json(t.at("c"));
            for (const auto& z : t.at("zeta"))
                term.zeta.push_back(complex_from_json(z));
            terms.push_back(std::move(term));
        }
        return ExpSum(dim, std::move(terms));
    }
    if (type == "exppoly") {
        std::vector<PolyTerm> terms;
        for (const auto& t : j.at("terms")) {
            PolyTerm term;
            for (const auto& m : t.at("monomials"))
                term.poly[m.at("alpha").get<std::vector<int>>()] = complex_from_json(m.at("c"));
            for (const auto& z : t.at("zeta"))
                term.zeta.push_back(complex_from_json(z));
            terms.push_back(std::move(term));
        }
        return ExpPoly(dim, std::move(terms));
    }
    throw InvalidSpec("unknown symbol type: " + type);
}

// ---------------------------------------------------------------------------
// Grids and fields
// ---------------------------------------------------------------------------

inline json to_json(const GridDomain& g) {
    return {{"dimension", g.dimension()},
            {"l", g.sampling_length()},
            {"points", g.points()}};
}

inline GridDomain grid_from_json(const json& j) {
    return GridDomain(j.at("dimension").get<int>(), j.at("l").get<double>(),
                      j.at("points").get<std::vector<IntVec>>(),
                      /*sort_lex=*/!j.value("ordered", false));
}

/// CSV of integer coordinates, one point per row, header `x0,x1,...`.
inline std::string grid_to_csv(const GridDomain& g) {
    std::ostringstream out;
    for (int k = 0; k < g.dimension(); ++k)
        out << (k ? "," : "") << "x" << k;
    out << "\n";
    for (const auto& p : g.points()) {
        for (int k = 0; k < g.dimension(); ++k)
            out << (k ? "," : "") << p[k];
        out << "\n";
    }
    return out.str();
}

inline json to_json(const SampledField& f) {
    json values = json::array();
    for (Eigen::Index i = 0; i < f.values.size(); ++i)
        values.push_back(complex_to_json(f.values(i)));
    return {{"domain", to_json(f.domain)}, {"values", values}};
}

inline SampledField field_from_json(const json& j) {
    // Values are listed in the order of the points as given; resorting the
    // grid must carry the values along.
    auto points = j.at("domain").at("points").get<std::vector<IntVec>>();
    GridDomain g(j.at("domain").at("dimension").get<int>(), j.at("domain").at("l").get<double>(),
                 points, /*sort_lex=*/true);
    const auto& jv = j.at("values");
    if (jv.size() != points.size())
        throw InvalidSpec("field value count does not match point count");
    Eigen::VectorXcd v(g.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        v(g.index_of(points[i])) = complex_from_json(jv[i]);
    return SampledField(std::move(g), std::move(v));
}

/// CSV with point coordinates and the value split into re/im.
inline std::string field_to_csv(const SampledField& f) {
    std::ostringstream out;
    for (int k = 0; k < f.domain.dimension(); ++k)
        out << "x" << k << ",";
    out << "re,im\n";
    out.precision(17);
    for (int i = 0; i < f.domain.size(); ++i) {
        for (std::int64_t c : f.domain.point(i))
            out << c << ",";
        out << f.values(i).real() << "," << f.values(i).imag() << "\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Matrices
// ---------------------------------------------------------------------------

inline std::string matrix_to_csv(const GeneralDomainMatrix& m) {
    std::ostringstream out;
    out << "row,col,re,im\n";
    out.precision(17);
    for (Eigen::Index i = 0; i < m.entries.rows(); ++i)
        for (Eigen::Index j = 0; j < m.entries.cols(); ++j)
            out << i << "," << j << "," << m.entries(i, j).real() << ","
                << m.entries(i, j).imag() << "\n";
    return out.str();
}

/// Header recording the domains, orderings, kind and sampling length that
/// index the CSV triplets.
inline json matrix_header_json(const GeneralDomainMatrix& m) {
    return {{"kind", m.kind == MatrixKind::toeplitz ? "toeplitz" : "hankel"},
            {"l", m.sampling_length()},
            {"rows", to_json(m.rows)},
            {"cols", to_json(m.cols)},
            {"shape", {m.entries.rows(), m.entries.cols()}}};
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

inline json to_json(const SpectralReport& r) {
    json sv = json::array();
    for (Eigen::Index i = 0; i < r.singular_values.size(); ++i)
        sv.push_back(r.singular_values(i));
    json j = {{"singular_values", sv},
              {"numerical_rank", r.numerical_rank},
              {"rank_tol", r.rank_tol},
              {"is_hermitian", r.is_hermitian},
              {"psd_tol", r.psd_tol}};
    switch (r.psd_verdict) {
    case PsdVerdict::psd: j["psd_verdict"] = "psd"; break;
    case PsdVerdict::not_psd: j["psd_verdict"] = "not_psd"; break;
    case PsdVerdict::not_hermitian: j["psd_verdict"] = "not_hermitian"; break;
    }
    if (r.is_hermitian) {
        j["min_eigenvalue"] = r.min_eigenvalue;
        json ev = json::array();
        for (Eigen::Index i = 0; i < r.eigenvalues.size(); ++i)
            ev.push_back(r.eigenvalues(i));
        j["eigenvalues"] = ev;
    }
    return j;
}

inline json to_json(const RecoveryResult& r, double rank_tol, double prune_tol) {
    json terms = json::array();
    auto freqs = r.frequencies();
    auto coeffs = r.coefficients();
    for (std::size_t k = 0; k < freqs.size(); ++k)
        terms.push_back({{"xi", freqs[k]}, {"c", coeffs[k]}});
    return {{"terms", terms},
            {"residual", r.residual},
            {"frequencies_real", r.frequencies_real},
            {"coefficients_positive", r.coefficients_positive},
            {"rank_used", r.rank_used},
            {"rank_tol", rank_tol},
            {"prune_tol", prune_tol}};
}

inline json to_json(const SweepReport& r) {
    json rows = json::array();
    for (const auto& rec : r.per_l) {
        json row = {{"l", rec.l},
                    {"empty_domain", rec.empty_domain},
                    {"xi_size", rec.xi_size},
                    {"ups_size", rec.ups_size},
                    {"omega_size", rec.omega_size},
                    {"numerical_rank", rec.numerical_rank},
                    {"sigma_max", rec.sigma_max},
                    {"symbol_norm", rec.symbol_norm},
                    {"boundary_count", rec.boundary_count},
                    {"interior_count", rec.interior_count},
                    {"ld_boundary", rec.ld_boundary}};
        if (!rec.operator_errors.empty())
            row["operator_errors"] = rec.operator_errors;
        rows.push_back(std::move(row));
    }
    return {{"l_values", r.l_values},
            {"per_l", rows},
            {"stabilization_index", r.stabilization_index}};
}

/// Flat CSV, one row per sampling length, for external plotting.
inline std::string sweep_to_csv(const SweepReport& r) {
    std::size_t nerr = 0;
    for (const auto& rec : r.per_l)
        nerr = std::max(nerr, rec.operator_errors.size());
    std::ostringstream out;
    out << "l,empty_domain,xi_size,ups_size,omega_size,numerical_rank,sigma_max,symbol_norm,"
           "boundary_count,interior_count,ld_boundary";
    for (std::size_t e = 0; e < nerr; ++e)
        out << ",operator_error_" << e;
    out << "\n";
    out.precision(17);
    for (const auto& rec : r.per_l) {
        out << rec.l << "," << (rec.empty_domain ? 1 : 0) << "," << rec.xi_size << ","
            << rec.ups_size << "," << rec.omega_size << "," << rec.numerical_rank << ","
            << rec.sigma_max << "," << rec.symbol_norm << "," << rec.boundary_count << ","
            << rec.interior_count << "," << rec.ld_boundary;
        for (std::size_t e = 0; e < nerr; ++e)
            out << "," << (e < rec.operator_errors.size() ? rec.operator_errors[e] : 0.0);
        out << "\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// File helpers
// ---------------------------------------------------------------------------

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InvalidSpec("cannot open output file: " + path);
    out << content;
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InvalidSpec("cannot open input file: " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw InvalidSpec(std::string("JSON parse error in ") + path + ": " + e.what());
    }
}

} // namespace gendomain

#endif // GENDOMAIN_SERIALIZATION_HPP

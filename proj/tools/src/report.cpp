#include "report.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>

namespace tautdrg::cli {

namespace {

Json numbers(const std::vector<double>& xs)
{
    Json out = Json::array();
    for (double x : xs)
        out.push_back(number(x));
    return out;
}

template <class T>
Json ints(const std::vector<T>& xs)
{
    Json out = Json::array();
    for (auto x : xs)
        out.push_back(static_cast<std::int64_t>(x));
    return out;
}

Json bools(const std::vector<bool>& xs)
{
    Json out = Json::array();
    for (bool x : xs)
        out.push_back(x);
    return out;
}

// worst residual per check name, in first-seen order
Json residuals(const VerificationReport& r, const std::string& prefix = {})
{
    Json out = Json::object();
    for (const auto& c : r.checks()) {
        if (!prefix.empty() && c.name.rfind(prefix, 0) != 0)
            continue;
        const double prev = out.contains(c.name) ? out[c.name].get<double>() : 0.0;
        out[c.name] = std::max(prev, c.residual);
    }
    for (auto& [k, v] : out.items())
        v = number(v.get<double>());
    return out;
}

double worst(const VerificationReport& r, const std::string& name)
{
    double w = 0;
    for (const auto& c : r.checks())
        if (c.name == name)
            w = std::max(w, c.residual);
    return w;
}

Json descriptor(const TModuleDescriptor& m)
{
    Json j;
    j["endpoint"] = m.endpoint;
    j["dimension"] = m.dimension;
    j["thin"] = m.thin;
    j["level_dims"] = ints(m.level_dims);
    j["eta"] = m.eta ? number(*m.eta) : Json(nullptr);
    j["n"] = m.n;
    j["vanishing_E"] = ints(m.vanishing_E);
    j["basis_norms"] = numbers(m.basis_norms);
    j["sub"] = numbers(m.sub);
    j["super"] = numbers(m.super);
    j["tridiagonal_eigenvalues"] = numbers(m.tridiagonal_eigenvalues);
    j["multiplicity"] = m.multiplicity;
    return j;
}

Json sides(const Sides& s, bool equal)
{
    Json j;
    j["lhs"] = number(s.lhs);
    j["rhs"] = number(s.rhs);
    j["residual"] = number(std::abs(s.lhs - s.rhs));
    j["equal"] = equal;
    return j;
}

Json graph_section(const GlobalContext& ctx)
{
    Json j;
    j["vertices"] = ctx.n();
    j["edges"] = static_cast<std::int64_t>(ctx.graph.edge_count());
    j["diameter"] = ctx.D();
    j["valency"] = ctx.ia().valency();
    j["bipartite"] = ctx.ia().is_bipartite();
    j["antipodal_2cover"] = is_antipodal_2cover(ctx.dd);
    return j;
}

Json array_section(const GlobalContext& ctx)
{
    const auto& ia = ctx.ia();
    std::vector<std::int64_t> b, c, k;
    for (int i = 0; i < ia.diameter(); ++i)
        b.push_back(ia.b(i));
    for (int i = 1; i <= ia.diameter(); ++i)
        c.push_back(ia.c(i));
    for (int i = 0; i <= ia.diameter(); ++i)
        k.push_back(ia.k_i(i));
    Json j;
    j["b"] = ints(b);
    j["c"] = ints(c);
    j["k"] = ints(k);
    j["p222"] = ctx.p222;
    return j;
}

Json spectrum_section(const GlobalContext& ctx)
{
    Json rows = Json::array();
    for (int i = 0; i <= ctx.D(); ++i) {
        Json r;
        r["i"] = i;
        r["theta"] = number(ctx.spec.theta[i]);
        r["mult"] = ctx.spec.mult[i];
        rows.push_back(r);
    }
    Json j;
    j["eigenvalues"] = rows;
    Json res;
    for (const char* name : {"two-route spectrum", "trace E_i = m_i", "spectrum symmetric"})
        res[name] = number(worst(ctx.report, name));
    j["residuals"] = res;
    return j;
}

Json vertex_section(const VertexAnalysis& an)
{
    Json j;
    j["x"] = an.x;

    const auto& ls = an.local;
    Json local;
    local["eta"] = numbers(ls.eta);
    local["theta_tilde_1"] = number(ls.theta_tilde_1);
    local["theta_tilde_d"] = number(ls.theta_tilde_d);
    Json phi = Json::array();
    for (const auto& e : ls.phi)
        phi.push_back(Json{{"eta", number(e.eta)}, {"mult", e.mult}});
    local["distinct"] = phi;
    local["residuals"] = residuals(an.report, "trace identity");
    local["residuals"]["local eigenvalue bounds"] = number(worst(an.report, "local eigenvalue bounds"));
    j["local_spectrum"] = local;

    Json U;
    U["dim"] = an.U.U.dim();
    Json parts = Json::array();
    for (const auto& p : an.U.parts)
        parts.push_back(Json{{"eta", number(p.eta)}, {"dim", p.space.dim()}});
    U["parts"] = parts;
    j["U"] = U;

    j["endpoint0"] = descriptor(an.V0);
    j["endpoint1"] = descriptor(an.Y.module);
    j["endpoint1"]["seed_dim"] = an.Y.seeds.dim();

    Json mods = Json::array();
    for (const auto& m : an.modules) {
        Json e;
        e["eta"] = number(m.eta);
        Json norms;
        norms["norms2"] = numbers(m.norms.norms2);
        norms["vanishes"] = bools(m.norms.vanishes);
        norms["predicted_zero"] = bools(m.norms.predicted);
        norms["dim_Mv"] = m.norms.dim_Mv;
        norms["expected_dim_Mv"] = m.norms.expected_dim_Mv;
        e["norms"] = norms;
        e["closure"] = descriptor(m.closure);
        e["module"] = m.module ? descriptor(*m.module) : Json(nullptr);
        mods.push_back(e);
    }
    j["endpoint2"] = mods;
    j["endpoint2_residuals"] = residuals(an.report, "endpoint-2");

    Json mult = Json::array();
    for (const auto& r : an.multiplicities)
        mult.push_back(Json{{"n", r.n}, {"eta", number(r.eta)}, {"mu", r.mu}, {"dim_U", r.dim_U}, {"mult", r.mult}});
    j["multiplicities"] = mult;

    const auto& ac = an.accounting;
    j["accounting"] = Json{{"endpoint0", ac.endpoint0},
                           {"endpoint1", ac.endpoint1},
                           {"endpoint2_thin", ac.endpoint2_thin},
                           {"residual", ac.residual},
                           {"total", ac.total}};
    j["checks"] = an.report.size();
    j["max_residual"] = number(an.report.max_residual());
    j["passed"] = an.report.all_passed();
    return j;
}

Json classification_section(const TautReport& t)
{
    Json j;
    j["classification"] = to_string(t.classification);
    j["delta"] = t.delta;
    j["p222"] = number(t.p222);
    j["curtin"] = sides(t.curtin, t.curtin_equal);
    j["taut_inequality"] = sides(t.bfb, t.bfb_equal);
    j["antipodal_2cover"] = t.antipodal_2cover;
    j["predicted_mult_theta_tilde_1"] = t.predicted_mult_1 ? number(*t.predicted_mult_1) : Json(nullptr);
    j["predicted_mult_theta_tilde_d"] = t.predicted_mult_d ? number(*t.predicted_mult_d) : Json(nullptr);
    Json vs = Json::array();
    for (const auto& v : t.vertices) {
        Json e;
        e["x"] = v.x;
        e["spectrally_taut"] = v.spectrally_taut;
        e["algebraically_taut"] = v.algebraically_taut ? Json(*v.algebraically_taut) : Json(nullptr);
        e["two_thin"] = v.two_thin;
        e["mult_theta_tilde_1"] = v.mult_theta_tilde_1;
        e["mult_theta_tilde_d"] = v.mult_theta_tilde_d;
        vs.push_back(e);
    }
    j["vertices"] = vs;
    return j;
}

Json header(const Analysis& a, const Source& src, const char* command)
{
    Json doc;
    doc["schema"] = kSchema;
    doc["command"] = command;
    doc["input"] = Json{{"kind", src.kind}, {"value", src.value}};
    const auto& t = a.ctx->tol;
    doc["tolerances"] = Json{{"eig", number(t.eig)},
                             {"rank", number(t.rank)},
                             {"cluster", number(t.cluster)},
                             {"module", number(t.module)},
                             {"classify", number(t.classify)}};
    return doc;
}

Json summary(const VerificationReport& r)
{
    std::size_t failed = 0;
    for (const auto& c : r.checks())
        failed += c.pass ? 0 : 1;
    Json j;
    j["passed"] = r.all_passed();
    j["checks"] = r.size();
    j["failed"] = failed;
    j["max_residual"] = number(r.max_residual());
    return j;
}

void render(std::ostringstream& os, const Json& j, int indent);

std::string scalar(const Json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_number_float())
        return format_number(v.get<double>());
    return v.dump();
}

bool is_flat(const Json& v)
{
    if (!v.is_array())
        return !v.is_object();
    return std::all_of(v.begin(), v.end(), [](const Json& e) { return !e.is_array() && !e.is_object(); });
}

std::string flat(const Json& v)
{
    if (!v.is_array())
        return scalar(v);
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ", ";
        s += scalar(v[i]);
    }
    return s + "]";
}

void render_object(std::ostringstream& os, const Json& j, int indent, bool first_inline)
{
    bool first = true;
    for (const auto& [k, v] : j.items()) {
        const std::string pad = (first && first_inline) ? "" : std::string(indent, ' ');
        first = false;
        if (is_flat(v) || (v.is_object() && v.empty())) {
            os << pad << k << ": " << (v.is_object() ? "{}" : flat(v)) << '\n';
        } else {
            os << pad << k << ":\n";
            render(os, v, indent + 2);
        }
    }
}

void render(std::ostringstream& os, const Json& j, int indent)
{
    const std::string pad(indent, ' ');
    if (j.is_object()) {
        render_object(os, j, indent, false);
    } else if (j.is_array()) {
        for (const auto& e : j) {
            if (e.is_object() && !e.empty()) {
                os << pad << "- ";
                render_object(os, e, indent + 2, true);
            } else if (is_flat(e)) {
                os << pad << "- " << flat(e) << '\n';
            } else {
                os << pad << "-\n";
                render(os, e, indent + 2);
            }
        }
    } else {
        os << pad << scalar(j) << '\n';
    }
}

}  // namespace

Json number(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    double r = std::strtod(buf, nullptr);
    if (r == 0.0)
        r = 0.0;
    return r;
}

std::string format_number(double v)
{
    if (!std::isfinite(v))
        return number(v).get<std::string>();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
    return buf;
}

const std::set<std::string>& all_sections()
{
    static const std::set<std::string> s = {"graph", "array", "spectrum", "vertices", "classification",
                                            "verification"};
    return s;
}

Json analysis_document(const Analysis& a, const Source& src, const std::set<std::string>& sections)
{
    Json doc = header(a, src, "analyze");
    const auto& ctx = *a.ctx;
    auto want = [&](const char* s) { return sections.count(s) > 0; };
    if (want("graph"))
        doc["graph"] = graph_section(ctx);
    if (want("array"))
        doc["intersection_array"] = array_section(ctx);
    if (want("spectrum"))
        doc["spectrum"] = spectrum_section(ctx);
    if (want("vertices")) {
        Json vs = Json::array();
        for (const auto& an : a.vertices)
            vs.push_back(vertex_section(an));
        doc["vertices"] = vs;
    }
    if (want("classification"))
        doc["classification"] = classification_section(a.taut);
    if (want("verification"))
        doc["verification"] = summary(a.combined());
    return doc;
}

Json verification_rows(const VerificationReport& r)
{
    Json rows = Json::array();
    std::map<std::string, std::size_t> where;
    for (const auto& c : r.checks()) {
        auto it = where.find(c.name);
        if (it == where.end()) {
            where.emplace(c.name, rows.size());
            Json row;
            row["name"] = c.name;
            row["identity"] = c.identity;
            row["checks"] = 0;
            row["max_residual"] = 0.0;
            row["threshold"] = c.threshold;
            row["pass"] = true;
            row["detail"] = "";
            rows.push_back(row);
            it = where.find(c.name);
        }
        Json& row = rows[it->second];
        row["checks"] = row["checks"].get<int>() + 1;
        if (c.residual >= row["max_residual"].get<double>()) {
            row["max_residual"] = c.residual;
            row["threshold"] = c.threshold;
        }
        if (!c.pass && row["pass"].get<bool>()) {
            row["pass"] = false;
            row["detail"] = c.detail;
        }
    }
    for (auto& row : rows) {
        row["max_residual"] = number(row["max_residual"].get<double>());
        row["threshold"] = number(row["threshold"].get<double>());
        if (row["detail"].get<std::string>().empty())
            row.erase("detail");
    }
    return rows;
}

Json verify_document(const Analysis& a, const Source& src)
{
    Json doc = header(a, src, "verify");
    doc["vertices"] = ints([&] {
        std::vector<int> xs;
        for (const auto& v : a.vertices)
            xs.push_back(v.x);
        return xs;
    }());
    doc["classification"] = to_string(a.taut.classification);
    const VerificationReport all = a.combined();
    doc["rows"] = verification_rows(all);
    doc["verification"] = summary(all);
    return doc;
}

std::string render_text(const Json& doc)
{
    std::ostringstream os;
    render(os, doc, 0);
    return os.str();
}

std::string render_verify_table(const Json& doc)
{
    std::ostringstream os;
    os << "schema: " << doc["schema"].get<std::string>() << '\n';
    os << "input: " << doc["input"]["kind"].get<std::string>() << ' ' << doc["input"]["value"].get<std::string>()
       << '\n';
    os << "vertices: " << flat(doc["vertices"]) << '\n';
    os << "classification: " << doc["classification"].get<std::string>() << "\n\n";

    std::vector<std::array<std::string, 6>> cells;
    cells.push_back({"name", "identity", "checks", "max residual", "threshold", "status"});
    for (const auto& row : doc["rows"])
        cells.push_back({row["name"].get<std::string>(), row["identity"].get<std::string>(),
                         std::to_string(row["checks"].get<int>()), scalar(row["max_residual"]),
                         scalar(row["threshold"]), row["pass"].get<bool>() ? "pass" : "FAIL"});
    std::array<std::size_t, 6> w{};
    for (const auto& r : cells)
        for (std::size_t i = 0; i < w.size(); ++i)
            w[i] = std::max(w[i], r[i].size());
    for (const auto& r : cells) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            os << r[i];
            if (i + 1 < r.size())
                os << std::string(w[i] - r[i].size() + 2, ' ');
        }
        os << '\n';
    }
    for (const auto& row : doc["rows"])
        if (row.contains("detail"))
            os << "failed: " << row["name"].get<std::string>() << ": " << row["detail"].get<std::string>() << '\n';

    const auto& s = doc["verification"];
    os << '\n'
       << s["checks"].get<std::size_t>() << " checks, " << s["failed"].get<std::size_t>()
       << " failed, max residual " << scalar(s["max_residual"]) << '\n';
    return os.str();
}

}  // namespace tautdrg::cli

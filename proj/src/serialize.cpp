#include "speclab/serialize.hpp"

#include "speclab/error.hpp"
#include "speclab/graph6.hpp"

#include <sstream>

namespace speclab {

namespace {

std::string_view mode_name(StructureMode m) { return m == StructureMode::Fs ? "fs" : "qt"; }

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

Json to_json(const VertexSet& s)
{
    Json out = Json::array();
    for (Vertex v : s.members())
        out.push_back(v);
    return out;
}

VertexSet vertex_set_from_json(const Json& j, std::size_t universe)
{
    if (!j.is_array())
        throw Error(ErrorCode::InvalidSpec, "vertex set must be a JSON array");
    VertexSet s(universe);
    for (const auto& v : j) {
        if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<unsigned long long>() >= universe)
            throw Error(ErrorCode::IndexOutOfRange, "vertex " + v.dump() + " outside 0.." + std::to_string(universe));
        s.insert(v.get<Vertex>());
    }
    return s;
}

Json to_json(const Layout& layout)
{
    Json regions = Json::object();
    for (const auto& [label, set] : layout.regions())
        regions[label] = to_json(set);
    return Json{{"regions", regions}, {"degenerate", layout.degenerate}};
}

Json to_json(const SpectralResult& r)
{
    return Json{{"rho", r.rho}, {"residual", r.residual}, {"iterations", r.iterations}, {"vector", r.vector}};
}

Json to_json(const PerronAudit& a)
{
    return Json{{"min_entry", a.min_entry},
                {"argmin", a.argmin},
                {"inverse_rho", a.inverse_rho},
                {"margin", a.margin},
                {"satisfied", a.satisfied}};
}

Json certificate_json(const MinorModel& m)
{
    Json sets = Json::array();
    for (const auto& s : m.branch_sets)
        sets.push_back(to_json(s));
    return Json{{"pattern_g6", g6_encode(m.pattern)}, {"host_n", m.host_n}, {"branch_sets", sets}};
}

MinorModel certificate_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("pattern_g6") || !j.contains("host_n") || !j.contains("branch_sets"))
        throw Error(ErrorCode::InvalidSpec, "certificate needs pattern_g6, host_n and branch_sets");
    if (!j["pattern_g6"].is_string() || !j["host_n"].is_number_unsigned() || !j["branch_sets"].is_array())
        throw Error(ErrorCode::InvalidSpec, "certificate fields have the wrong types");
    MinorModel m;
    m.pattern = g6_decode(j["pattern_g6"].get<std::string>());
    m.host_n = j["host_n"].get<std::size_t>();
    if (m.host_n > kMaxOrder)
        throw Error(ErrorCode::SizeLimitExceeded, "certificate host_n exceeds 4096");
    for (const auto& s : j["branch_sets"])
        m.branch_sets.push_back(vertex_set_from_json(s, m.host_n));
    return m;
}

Json to_json(const MinorAnswer& a)
{
    Json out{{"status", to_string(a.status)}, {"nodes", a.nodes}};
    if (a.model)
        out["certificate"] = certificate_json(*a.model);
    return out;
}

Json to_json(const FsWitness& w)
{
    Json m = Json::array();
    for (auto [u, v] : w.matching)
        m.push_back({u, v});
    return Json{{"center", w.center}, {"matching", m}};
}

Json to_json(const QtWitness& w)
{
    Json p = Json::array();
    for (const auto& path : w.paths)
        p.push_back({path[0], path[1], path[2]});
    return Json{{"center", w.center}, {"paths", p}};
}

Json to_json(const StructureReport& r)
{
    return Json{{"mode", mode_name(r.mode)},
                {"A", to_json(r.a)},
                {"B", to_json(r.b)},
                {"R", to_json(r.r)},
                {"D", to_json(r.d)},
                {"bipartite_complete", r.bipartite_complete},
                {"b_path_free", r.b_path_free},
                {"max_outside_b_neighbors", r.max_outside_b_neighbors},
                {"outside_bound", r.outside_bound},
                {"outside_ok", r.outside_ok},
                {"delta", r.delta},
                {"d_threshold", r.d_threshold},
                {"d_meets_threshold", r.d_meets_threshold}};
}

Json to_json(const ClosureReport& r)
{
    return Json{{"mode", mode_name(r.mode.kind)},
                {"param", r.mode.param},
                {"A", to_json(r.a)},
                {"B", to_json(r.b)},
                {"edges_added", r.edges_added},
                {"before", to_json(r.before)},
                {"after", to_json(r.after)},
                {"consistent", r.consistent}};
}

Json to_json(const SearchReport& r, bool timing)
{
    return Json{{"n", r.n},
                {"constraint", r.constraint},
                {"enumerated", r.enumerated},
                {"feasible", r.feasible},
                {"best_rho", r.best_rho},
                {"maximizers", r.maximizers},
                {"predicted_g6", r.predicted_g6},
                {"match", r.match},
                {"exhausted_count", r.exhausted_count},
                {"elapsed", timing ? r.elapsed : 0.0},
                {"notes", r.notes}};
}

Json to_json(const TheoremCheck& c, bool timing)
{
    return Json{{"report", to_json(c.report, timing)},
                {"predicted_status", to_string(c.predicted_status)},
                {"predicted_free", c.predicted_free},
                {"predicted_rho", c.predicted_rho},
                {"closed_form_rho", c.closed_form_rho},
                {"closed_form_agrees", c.closed_form_agrees}};
}

Json to_json(const AuditEntry& e)
{
    Json out{{"family", e.family}, {"n", e.n}, {"edges", e.edges}, {"check", e.check}};
    out["expected_edges"] = e.expected_edges ? Json(*e.expected_edges) : Json(nullptr);
    out["slack"] = e.slack ? Json(*e.slack) : Json(nullptr);
    out["ok"] = e.ok;
    return out;
}

Json to_json(const EdgeBoundAudit& a)
{
    Json entries = Json::array();
    for (const auto& e : a.entries)
        entries.push_back(to_json(e));
    Json fits = Json::array();
    for (const auto& f : a.fits)
        fits.push_back({{"group", f.group}, {"orders", f.orders}, {"slope", f.slope}, {"intercept", f.intercept}});
    return Json{{"mode", mode_name(a.mode)},
                {"param", a.param},
                {"c", a.c},
                {"entries", entries},
                {"fits", fits},
                {"all_ok", a.all_ok}};
}

std::string search_csv(const std::vector<SearchReport>& reports, bool timing)
{
    std::ostringstream out;
    out << "n,constraint,enumerated,feasible,best_rho,maximizers,predicted_g6,match,exhausted_count,elapsed\n";
    for (const auto& r : reports) {
        std::string maxi;
        for (const auto& m : r.maximizers)
            maxi += (maxi.empty() ? "" : " ") + m;
        out << r.n << ',' << csv_field(r.constraint) << ',' << r.enumerated << ',' << r.feasible << ','
            << Json(r.best_rho).dump() << ',' << csv_field(maxi) << ',' << csv_field(r.predicted_g6) << ','
            << (r.match ? "true" : "false") << ',' << r.exhausted_count << ','
            << Json(timing ? r.elapsed : 0.0).dump() << '\n';
    }
    return out.str();
}

}  // namespace speclab

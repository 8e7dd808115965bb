#include "sniplab/json_io.hpp"

#include "sniplab/error.hpp"

namespace sniplab {

namespace {

template <typename F>
auto guarded(const char* what, F f) -> decltype(f())
{
    try {
        return f();
    } catch (const Error&) {
        throw;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string(what) + ": " + e.what());
    }
}

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) {
        throw Error(ErrorKind::ParseError, std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

Rational rational_from_json(const Json& v)
{
    if (v.is_string()) {
        return parse_rational(v.get<std::string>());
    }
    if (v.is_number_integer()) {
        return Rational(v.get<long>());
    }
    throw Error(ErrorKind::ParseError, "matrix entries must be rational strings or integers");
}

}  // namespace

Json matrix_to_json(const Matrix& m)
{
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            row.push_back(to_string(m(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const Json& j)
{
    return guarded("matrix", [&] {
        const auto rows = field(j, "rows").get<std::size_t>();
        const auto cols = field(j, "cols").get<std::size_t>();
        const Json& entries = field(j, "entries");
        if (!entries.is_array() || entries.size() != rows) {
            throw Error(ErrorKind::ParseError, "entries must have " + std::to_string(rows) + " rows");
        }
        Matrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r) {
            const Json& row = entries[r];
            if (!row.is_array() || row.size() != cols) {
                throw Error(ErrorKind::ParseError,
                            "row " + std::to_string(r) + " must have " + std::to_string(cols) +
                                " entries");
            }
            for (std::size_t c = 0; c < cols; ++c) {
                m(r, c) = rational_from_json(row[c]);
            }
        }
        return m;
    });
}

Json graph_to_json(const RootedGraph& g)
{
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges()) {
        edges.push_back(Json::array({u, v}));
    }
    return Json{{"n", g.n()}, {"edges", std::move(edges)}, {"root", g.root()}};
}

RootedGraph graph_from_json(const Json& j)
{
    return guarded("graph", [&] {
        const auto n = field(j, "n").get<std::size_t>();
        const Vertex root = j.contains("root") ? j.at("root").get<Vertex>() : 0;
        std::vector<Edge> edges;
        for (const Json& e : field(j, "edges")) {
            if (!e.is_array() || e.size() != 2) {
                throw Error(ErrorKind::ParseError, "edges must be [u, v] pairs");
            }
            edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
        }
        return RootedGraph(n, edges, root);
    });
}

Json pair_to_json(const NullityPair& p)
{
    return Json::array({p.k, p.l});
}

NullityPair pair_from_json(const Json& j)
{
    return guarded("pair", [&] {
        if (!j.is_array() || j.size() != 2) {
            throw Error(ErrorKind::ParseError, "pair must be [k, l]");
        }
        return NullityPair{j[0].get<std::size_t>(), j[1].get<std::size_t>()};
    });
}

Json certificate_to_json(const SnipCertificate& c)
{
    return Json{{"graph", graph_to_json(c.graph)},
                {"matrix", matrix_to_json(c.matrix)},
                {"pair", pair_to_json(c.pair)},
                {"index", std::string(to_string(c.index_type))},
                {"snip", c.snip()},
                {"snip_direct", c.snip_direct},
                {"snip_cases", c.snip_cases},
                {"snip_recipe", c.snip_recipe}};
}

SnipCertificate certificate_from_json(const Json& j)
{
    return guarded("certificate", [&] {
        SnipCertificate c;
        c.graph = graph_from_json(field(j, "graph"));
        c.matrix = matrix_from_json(field(j, "matrix"));
        c.pair = pair_from_json(field(j, "pair"));
        const auto index = field(j, "index").get<std::string>();
        if (index == "upper") {
            c.index_type = IndexType::Upper;
        } else if (index == "neutral") {
            c.index_type = IndexType::Neutral;
        } else if (index == "downer") {
            c.index_type = IndexType::Downer;
        } else {
            throw Error(ErrorKind::ParseError, "unknown index type \"" + index + "\"");
        }
        const bool snip = field(j, "snip").get<bool>();
        c.snip_direct = j.value("snip_direct", snip);
        c.snip_cases = j.value("snip_cases", snip);
        c.snip_recipe = j.value("snip_recipe", snip);
        return c;
    });
}

Json report_to_json(const XiXiReport& r)
{
    Json certs = Json::array();
    for (const auto& c : r.certificates) {
        certs.push_back(certificate_to_json(c));
    }
    return Json{{"graph", graph_to_json(r.graph)},
                {"certified_lower", r.certified_lower},
                {"minor_value", r.minor_value},
                {"saturated", r.saturated},
                {"edge_bound_ok", r.edge_bound_ok},
                {"certificates", std::move(certs)}};
}

XiXiReport report_from_json(const Json& j)
{
    return guarded("report", [&] {
        XiXiReport r;
        r.graph = graph_from_json(field(j, "graph"));
        r.certified_lower = field(j, "certified_lower").get<std::size_t>();
        r.minor_value = field(j, "minor_value").get<int>();
        r.saturated = field(j, "saturated").get<bool>();
        r.edge_bound_ok = field(j, "edge_bound_ok").get<bool>();
        for (const Json& c : field(j, "certificates")) {
            r.certificates.push_back(certificate_from_json(c));
        }
        return r;
    });
}

Json pair_flags_to_json(const std::set<PairFlag>& flags)
{
    Json out = Json::array();
    for (const auto& f : flags) {
        out.push_back(Json{{"pair", pair_to_json(f.pair)}, {"snip", f.snip}});
    }
    return out;
}

std::set<PairFlag> pair_flags_from_json(const Json& j)
{
    return guarded("pairs", [&] {
        std::set<PairFlag> out;
        for (const Json& f : j) {
            out.insert({pair_from_json(field(f, "pair")), field(f, "snip").get<bool>()});
        }
        return out;
    });
}

Json step_to_json(const PerturbStep& s)
{
    return Json{{"kind", to_string(s.kind)},
                {"parameter", to_string(s.parameter)},
                {"pair", pair_to_json(s.pair)},
                {"strict_pattern", s.strict_pattern},
                {"closed_pattern", s.closed_pattern},
                {"matrix", matrix_to_json(s.matrix)}};
}

Json parse_json(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

}  // namespace sniplab

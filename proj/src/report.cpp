#include "pisz/report.hpp"

#include <sstream>

namespace pisz {

namespace {

const char* relation_symbol(Relation r) { return r == Relation::kLessEqual ? "<=" : ">="; }

}  // namespace

Json invariants_json(std::size_t line, std::string_view graph6, const InvariantVector& iv, int n, std::size_t m) {
    Json j;
    j["line"] = line;
    j["graph6"] = graph6;
    j["n"] = n;
    j["m"] = m;
    j["W"] = iv.wiener;
    j["PI"] = iv.pi;
    j["PIv"] = iv.vertex_pi;
    j["Sz"] = iv.szeged;
    j["SzE"] = iv.edge_szeged;
    j["M1"] = iv.zagreb1;
    j["M2"] = iv.zagreb2;
    j["t"] = iv.triangles;
    j["diam"] = iv.diameter;
    j["delta"] = iv.min_degree;
    return j;
}

Json error_json(std::size_t line, std::string_view input, std::string_view error) {
    Json j;
    j["line"] = line;
    j["input"] = input;
    j["error"] = error;
    return j;
}

Json verdict_json(std::size_t line, std::string_view graph6, const TheoremVerdict& v) {
    Json j;
    j["line"] = line;
    j["graph6"] = graph6;
    j["theorem"] = theorem_key(v.id);
    j["applicable"] = v.applicable();
    if (v.outcome) {
        const Comparison& c = *v.outcome;
        j["relation"] = relation_symbol(c.relation);
        j["lhs"] = c.lhs;
        j["rhs"] = c.rhs;
        j["holds"] = c.holds;
        j["equality"] = c.equality;
        j["predicted_equality"] = c.predicted_equality;
        j["consistent"] = c.consistent;
        Json flags = Json::object();
        for (const auto& [name, value] : c.side_flags) flags[name] = value;
        j["flags"] = flags;
    }
    return j;
}

Json summary_json(const EnumerationSummary& s) {
    Json j;
    j["schema"] = kJsonSchemaVersion;
    j["order"] = s.order;
    j["total_graphs"] = s.total_graphs;
    j["connected_graphs"] = s.connected_graphs;
    Json theorems = Json::object();
    for (std::size_t i = 0; i < s.per_theorem.size(); ++i) {
        const TheoremTally& t = s.per_theorem[i];
        theorems[std::string(theorem_key(kAllTheorems[i]))] = {
            {"checked", t.checked}, {"held", t.held}, {"equality", t.equality}, {"inconsistent", t.inconsistent}};
    }
    j["theorems"] = theorems;
    Json cex = Json::array();
    for (const auto& c : s.counterexamples) cex.push_back({{"graph6", c.graph6}, {"theorem", c.theorem}});
    j["counterexamples"] = cex;
    j["clean"] = s.clean();
    return j;
}

std::string invariants_csv_header() { return "line,graph6,n,m,W,PI,PIv,Sz,SzE,M1,M2,t,diam,delta"; }

std::string invariants_csv_row(std::size_t line, std::string_view graph6, const InvariantVector& iv, int n,
                               std::size_t m) {
    std::ostringstream os;
    os << line << ',' << graph6 << ',' << n << ',' << m << ',' << iv.wiener << ',' << iv.pi << ','
       << iv.vertex_pi << ',' << iv.szeged << ',' << iv.edge_szeged << ',' << iv.zagreb1 << ',' << iv.zagreb2
       << ',' << iv.triangles << ',' << iv.diameter << ',' << iv.min_degree;
    return os.str();
}

std::string verdict_csv_header() {
    return "line,graph6,theorem,applicable,relation,lhs,rhs,holds,equality,predicted_equality,consistent";
}

std::string verdict_csv_row(std::size_t line, std::string_view graph6, const TheoremVerdict& v) {
    std::ostringstream os;
    os << line << ',' << graph6 << ',' << theorem_key(v.id) << ',' << (v.applicable() ? 1 : 0);
    if (v.outcome) {
        const Comparison& c = *v.outcome;
        os << ',' << relation_symbol(c.relation) << ',' << c.lhs << ',' << c.rhs << ',' << c.holds << ','
           << c.equality << ',' << c.predicted_equality << ',' << c.consistent;
    } else {
        os << ",,,,,,,";
    }
    return os.str();
}

}  // namespace pisz

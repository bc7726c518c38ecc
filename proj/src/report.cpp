#include "toughcycles/report.hpp"

#include <json.hpp>

#include "toughcycles/io.hpp"

namespace toughcycles {

using ojson = nlohmann::ordered_json;

std::string record_json(const GraphAnalysis& a, bool timing) {
    ojson o;
    o["graph"] = a.graph6;
    o["n"] = a.n;
    o["alpha"] = a.alpha;
    o["sigma3"] = a.sigma3;
    o["nc2"] = a.nc2 ? ojson(*a.nc2) : ojson(nullptr);
    o["circumference"] = a.circumference ? ojson(*a.circumference) : ojson(nullptr);
    o["one_tough"] = a.one_tough;
    o["hypothesis"] = a.hypothesis.passes();
    ojson verdicts = ojson::array();
    for (const auto& v : a.verdicts) {
        ojson vo;
        vo["offset"] = v.offset;
        vo["rhs"] = v.rhs ? ojson(*v.rhs) : ojson(nullptr);
        vo["status"] = to_string(v.status);
        verdicts.push_back(std::move(vo));
    }
    o["verdicts"] = std::move(verdicts);
    if (a.oracles) {
        ojson arr = ojson::array();
        for (const auto& e : a.oracles->entries) {
            ojson eo;
            eo["oracle"] = e.id;
            eo["mode"] = to_string(e.mode);
            eo["status"] = to_string(e.status);
            eo["instances"] = e.instances;
            if (!e.reason.empty()) eo["reason"] = e.reason;
            if (!e.witness_json.empty()) eo["witness"] = ojson::parse(e.witness_json);
            arr.push_back(std::move(eo));
        }
        o["oracles"] = std::move(arr);
    }
    o["elapsed_ms"] = timing ? a.elapsed_ms : 0;
    return o.dump();
}

std::string summary_json(const ScanStats& s, bool with_oracles, bool timing, long long elapsed_ms) {
    ojson o;
    ojson body;
    body["total"] = s.total;
    body["connected"] = s.connected;
    body["hypothesis_passing"] = s.hypothesis_passing;
    body["hamiltonian_under_hypothesis"] = s.hamiltonian_under_hypothesis;
    body["non_hamiltonian_under_hypothesis"] = s.non_hamiltonian_under_hypothesis;
    body["counterexamples"] = s.counterexamples;
    body["oracle_failures"] = s.oracle_failures;
    body["warnings"] = s.warnings;
    body["skipped"] = s.skipped;
    ojson vt;
    for (const auto& [k, v] : s.verdict_totals) vt[k] = v;
    body["verdicts"] = std::move(vt);
    if (with_oracles) {
        ojson ot;
        for (const auto& [id, per] : s.oracle_totals) {
            ojson po;
            for (const auto& [st, cnt] : per) po[st] = cnt;
            ot[id] = std::move(po);
        }
        body["oracles"] = std::move(ot);
    }
    body["elapsed_ms"] = timing ? elapsed_ms : 0;
    o["summary"] = std::move(body);
    return o.dump();
}

namespace {

ojson vertices_json(std::span<const Vertex> vs) {
    ojson arr = ojson::array();
    for (Vertex v : vs) arr.push_back(v);
    return arr;
}

ojson set_json(VertexSet s) {
    ojson arr = ojson::array();
    for (Vertex v : s) arr.push_back(v);
    return arr;
}

}  // namespace

std::string setups_json(const Graph& g, const std::string& graph6, bool require_s3) {
    SetupEnumeration en = enumerate_setups(g, require_s3);
    ojson o;
    o["graph"] = graph6;
    o["longest_cycle_length"] = en.longest_length;
    ojson arr = ojson::array();
    for (const auto& s : en.setups) {
        ojson so;
        so["cycle"] = vertices_json(s.cycle().vertices());
        so["u"] = s.u();
        so["v"] = s.v();
        ojson b = ojson::array();
        for (Vertex x : s.b_order()) b.push_back(x);
        so["B"] = std::move(b);
        so["B_plus"] = set_json(s.b_plus());
        so["B_minus"] = set_json(s.b_minus());
        so["s3"] = s.s3_satisfied();
        ojson ivs = ojson::array();
        for (const auto& iv : s.decomposition().intervals) {
            ojson io;
            io["start"] = iv.start_b;
            io["end"] = iv.end_b;
            io["length"] = iv.length;
            io["inner"] = iv.inner;
            io["good"] = iv.good;
            ivs.push_back(std::move(io));
        }
        so["intervals"] = std::move(ivs);
        arr.push_back(std::move(so));
    }
    o["setups"] = std::move(arr);
    o["count"] = en.setups.size();
    if (!en.empty_reason.empty()) o["empty_reason"] = en.empty_reason;
    return o.dump();
}

std::string hopping_json(const Graph& g, const std::string& graph6, const OrientedCycle& c, Vertex u) {
    ojson o;
    o["graph"] = graph6;
    o["cycle"] = vertices_json(c.vertices());
    o["u"] = u;
    HoppingSets h = hopping_fixpoint(g, c, u);
    o["X"] = set_json(h.x);
    o["Y"] = set_json(h.y);
    o["iterations"] = h.iterations;
    ojson trace = ojson::array();
    for (const auto& [x, y] : h.trace) trace.push_back(ojson{{"X", set_json(x)}, {"Y", set_json(y)}});
    o["trace"] = std::move(trace);
    HoppingVerdicts v = check_hopping_conclusions(g, c, u, h);
    o["hypotheses_met"] = v.hypotheses_met;
    o["conclusions"] = ojson{{"a", v.a}, {"b", v.b}, {"c", v.c}, {"d", v.d}};
    o["status"] = !v.census_complete ? "skipped"
                  : !v.hypotheses_met ? "skipped"
                  : v.all_hold()      ? "holds"
                                      : "fails";
    return o.dump();
}

}  // namespace toughcycles

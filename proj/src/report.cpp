#include "chern/report.hpp"

#include "chern/version.hpp"

namespace chern {

namespace {

using oj = nlohmann::ordered_json;

oj hilbert_json(const hilbert_data& d) {
    oj o;
    o["dim"] = d.dim;
    o["H"] = d.H;
    o["h"] = d.h;
    o["e"] = d.e;
    o["truncation"] = d.truncation;
    o["window"] = d.window;
    if (d.reduction_index) o["reduction_index"] = *d.reduction_index;
    return o;
}

oj certificate_json(const superficial_certificate& c) {
    oj o;
    o["element"] = c.element;
    o["attempt"] = c.attempt;
    o["bound"] = c.c;
    o["window"] = c.window;
    o["seed"] = c.seed;
    oj lists = oj::array();
    for (const auto& per_filtration : c.checks) {
        oj one = oj::array();
        for (const definition_check& dc : per_filtration) {
            oj e;
            e["j"] = dc.j;
            e["pass"] = dc.pass;
            one.push_back(e);
        }
        lists.push_back(one);
    }
    o["definition_checks"] = lists;
    return o;
}

oj check_json(const theorem_report& r) {
    oj o;
    o["id"] = r.id;
    o["verdict"] = verdict_str(r.v);
    o["hypotheses"] = r.hypotheses;
    oj q = oj::object();
    for (const auto& [k, x] : r.quantities) q[k] = x;
    o["quantities"] = q;
    o["notes"] = r.notes;
    return o;
}

} // namespace

oj build_report(const report_inputs& in) {
    oj o;
    o["engine"] = oj::object();
    o["engine"]["name"] = "chern";
    o["engine"]["version"] = engine_version;
    o["seed"] = in.seed;
    o["job"] = in.job_echo;

    o["ring"] = oj::object();
    o["ring"]["field"] = in.field_name;
    o["ring"]["vars"] = in.vars;
    o["ring"]["dim"] = in.ring_dim;

    o["module"] = oj::object();
    o["module"]["dim"] = in.module_dim;
    o["module"]["grade"] = in.grade;
    o["module"]["cohen_macaulay"] = in.cohen_macaulay;
    o["module"]["lambda_W"] = in.lambda_w;

    o["filtration"] = oj::object();
    o["filtration"]["adic"] = in.adic;
    o["filtration"]["head_terms"] = in.head_terms;
    oj hmain = hilbert_json(in.main);
    for (auto& [k, v] : hmain.items()) o["filtration"][k] = v;

    if (in.adic_control) o["adic_control"] = hilbert_json(*in.adic_control);
    if (in.e_control) o["e_control"] = hilbert_json(*in.e_control);
    if (in.saturated) o["saturated"] = hilbert_json(*in.saturated);

    o["J"] = in.j_gens;
    oj certs = oj::array();
    for (const auto& c : in.certificates) certs.push_back(certificate_json(c));
    o["superficial"] = certs;

    o["v"] = in.v;
    if (in.u)
        o["u"] = *in.u;
    else
        o["u"] = nullptr;

    if (in.sally) {
        oj s;
        s["H"] = in.sally->HS;
        s["numerator"] = in.sally->numerator;
        s["zero"] = in.sally->is_zero;
        s["dim_is_d"] = in.sally->dim_is_d;
        s["e0"] = in.sally->e0;
        s["sum_v_from_1"] = in.sally->sum_v_tail;
        o["sally"] = s;
    } else {
        o["sally"] = nullptr;
    }

    oj checks = oj::array();
    for (const auto& c : in.checks) checks.push_back(check_json(c));
    o["checks"] = checks;

    oj t = oj::object();
    for (const auto& [k, ms] : in.timings_ms) t[k] = ms;
    o["timings_ms"] = t;
    return o;
}

void strip_timings(oj& report) { report.erase("timings_ms"); }

} // namespace chern

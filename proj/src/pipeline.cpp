#include "chern/pipeline.hpp"

#include <chrono>

#include "chern/parser.hpp"
#include "chern/report.hpp"

namespace chern {

namespace {

class stopwatch {
public:
    void lap(const std::string& name) {
        auto now = std::chrono::steady_clock::now();
        laps_.emplace_back(name, std::chrono::duration<double, std::milli>(now - last_).count());
        last_ = now;
    }
    std::vector<std::pair<std::string, double>> take() {
        auto start = start_;
        auto now = std::chrono::steady_clock::now();
        laps_.emplace_back("total", std::chrono::duration<double, std::milli>(now - start).count());
        return std::move(laps_);
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
    std::chrono::steady_clock::time_point last_ = start_;
    std::vector<std::pair<std::string, double>> laps_;
};

template <class K>
std::vector<poly<K>> parse_all(const std::vector<std::string>& texts, const ring_ptr& R) {
    std::vector<poly<K>> out;
    for (const std::string& t : texts) out.push_back(parse_poly<K>(t, R));
    return out;
}

template <class K>
run_result run_pipeline(const job& jb) {
    stopwatch clock;

    ring_ptr S = make_ring_desc(jb.vars, jb.field);
    graded_ring<K> A = make_ring(S, parse_all<K>(jb.ring_relations, S));
    cyclic_module<K> M = make_module(A, parse_all<K>(jb.module_relations, S));

    std::vector<poly<K>> qg;
    if (jb.q_gens.empty())
        for (size_t i = 0; i < S->nvars(); ++i) qg.push_back(poly<K>::variable(S, i));
    else
        qg = parse_all<K>(jb.q_gens, S);
    ideal<K> q(S, std::move(qg));

    std::vector<ideal<K>> head;
    for (const auto& texts : jb.head)
        head.push_back(ideal_sum(ideal<K>(S, parse_all<K>(texts, S)), M.rel));
    filtration<K> F(M, q, std::move(head));
    clock.lap("setup");

    engine_options opt;
    opt.seed = jb.seed.value_or(42);
    opt.window_stab = opt.window_superficial = opt.window_vv = jb.window;
    opt.max_index = jb.max_index;

    std::vector<std::string> checks = jb.checks.empty() ? default_check_ids() : jb.checks;
    for (const std::string& id : checks) {
        bool known = false;
        for (const std::string& k : default_check_ids())
            if (k == id) known = true;
        if (!known) input_error("unknown_check", "no check named '" + id + "'");
    }
    bool want_ring = false;
    for (const std::string& id : checks)
        if (id == "madic_characterization" || id == "sally_equivalences") want_ring = true;

    analysis<K> an = build_analysis(A, M, F, opt, want_ring);
    clock.lap("analysis");
    std::vector<theorem_report> results = run_checks(an, checks);
    clock.lap("checks");

    report_inputs in;
    in.job_echo = job_to_json(jb);
    in.seed = opt.seed;
    in.field_name = jb.field.str();
    in.vars = jb.vars;
    in.ring_dim = A.dim;
    in.module_dim = an.d;
    in.grade = int64_t(an.grade_m);
    in.cohen_macaulay = an.cm;
    in.lambda_w = an.sat.w_length;
    in.adic = F.is_adic();
    in.head_terms = int64_t(F.head_len());
    in.main = an.dM;
    in.adic_control = an.dN;
    in.e_control = an.dE;
    in.saturated = an.dsat;
    if (an.seq) {
        for (const poly<K>& g : an.seq->J.gens()) in.j_gens.push_back(g.str());
        for (const auto& st : an.seq->steps) in.certificates.push_back(st.cert);
    }
    in.v = an.v;
    in.u = an.u;
    in.sally = an.sally;
    in.checks = results;
    in.timings_ms = clock.take();

    outcome code = outcome::ok;
    for (const auto& r : results)
        if (r.v == verdict::inconsistent) code = outcome::inconsistent;
    return {build_report(in), code};
}

nlohmann::ordered_json error_json(outcome kind, const std::string& code,
                                  const std::string& message) {
    nlohmann::ordered_json o;
    o["engine"] = nlohmann::ordered_json::object();
    o["engine"]["name"] = "chern";
    o["error"] = nlohmann::ordered_json::object();
    o["error"]["status"] = int(kind);
    o["error"]["code"] = code;
    o["error"]["message"] = message;
    return o;
}

} // namespace

run_result run_job(const job& jb) {
    try {
        if (jb.field.kind == field_kind::prime) return run_pipeline<fp_scalar>(jb);
        return run_pipeline<rat_scalar>(jb);
    } catch (const engine_error& e) {
        return {error_json(e.kind(), e.code(), e.what()), e.kind()};
    } catch (const std::exception& e) {
        return {error_json(outcome::inconsistent, "unexpected", e.what()),
                outcome::inconsistent};
    }
}

} // namespace chern

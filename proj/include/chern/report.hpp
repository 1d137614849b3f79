#ifndef CHERN_REPORT_HPP
#define CHERN_REPORT_HPP

#include "json.hpp"

#include "chern/theorems.hpp"

namespace chern {

// everything the JSON report is built from, already field-independent
struct report_inputs {
    nlohmann::ordered_json job_echo;
    uint64_t seed = 0;
    std::string field_name;
    std::vector<std::string> vars;
    int ring_dim = 0;
    int module_dim = 0;
    int64_t grade = 0;
    bool cohen_macaulay = false;
    int64_t lambda_w = 0;
    bool adic = false;
    int64_t head_terms = 0;
    hilbert_data main;
    std::optional<hilbert_data> adic_control; // the J-adic filtration
    std::optional<hilbert_data> e_control;    // M ⊇ M_1 ⊇ JM_1 ⊇ ...
    std::optional<hilbert_data> saturated;
    std::vector<std::string> j_gens;
    std::vector<superficial_certificate> certificates;
    std::vector<int64_t> v;
    std::optional<std::vector<int64_t>> u;
    std::optional<sally_data> sally;
    std::vector<theorem_report> checks;
    std::vector<std::pair<std::string, double>> timings_ms;
};

nlohmann::ordered_json build_report(const report_inputs& in);

// reports are byte-identical across runs except for this section
void strip_timings(nlohmann::ordered_json& report);

} // namespace chern

#endif

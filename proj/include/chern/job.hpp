#ifndef CHERN_JOB_HPP
#define CHERN_JOB_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// nlohmann/json single header, at the vendor include root
#include "json.hpp"

#include "chern/field.hpp"

namespace chern {

// one analysis job: a quotient ring, a cyclic module over it, and a good
// q-filtration given by finitely many head terms
struct job {
    std::string name = "job";
    field_spec field;
    std::vector<std::string> vars;
    std::vector<std::string> ring_relations;
    std::vector<std::string> module_relations;
    std::vector<std::string> q_gens;              // empty = all variables
    std::vector<std::vector<std::string>> head;   // texts of T_1..T_s
    std::optional<uint64_t> seed;
    int window = 4;
    int64_t max_index = 64;
    std::vector<std::string> checks;              // empty = default list
};

job job_from_json(const nlohmann::json& j);
job job_from_file(const std::string& path);
nlohmann::ordered_json job_to_json(const job& j);

} // namespace chern

#endif

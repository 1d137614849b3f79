#include "chern/job.hpp"

#include <cctype>
#include <fstream>

#include "chern/error.hpp"

namespace chern {

namespace {

bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

std::vector<std::string> string_list(const nlohmann::json& j, const std::string& key) {
    if (!j.is_array()) input_error("bad_field", "'" + key + "' must be an array of strings");
    std::vector<std::string> out;
    for (const auto& e : j) {
        if (!e.is_string())
            input_error("bad_field", "'" + key + "' must contain only strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

} // namespace

job job_from_json(const nlohmann::json& j) {
    if (!j.is_object()) input_error("bad_job", "job must be a JSON object");
    job out;

    if (j.contains("name")) {
        if (!j["name"].is_string()) input_error("bad_field", "'name' must be a string");
        out.name = j["name"].get<std::string>();
    }

    if (j.contains("field")) {
        const auto& f = j["field"];
        if (!f.is_object()) input_error("bad_field", "'field' must be an object");
        std::string kind = f.value("kind", "prime");
        if (kind == "prime") {
            out.field.kind = field_kind::prime;
            if (f.contains("p")) {
                if (!f["p"].is_number_unsigned())
                    input_error("bad_field", "'field.p' must be a positive integer");
                out.field.p = f["p"].get<uint32_t>();
            }
        } else if (kind == "rationals") {
            out.field.kind = field_kind::rationals;
        } else {
            input_error("bad_field", "'field.kind' must be 'prime' or 'rationals'");
        }
    }
    validate_field(out.field);

    if (!j.contains("vars")) input_error("missing_field", "job needs 'vars'");
    out.vars = string_list(j["vars"], "vars");
    if (out.vars.empty()) input_error("bad_field", "'vars' must be nonempty");
    for (const auto& v : out.vars)
        if (!valid_identifier(v))
            input_error("bad_variable", "'" + v + "' is not a valid variable name");
    for (size_t a = 0; a < out.vars.size(); ++a)
        for (size_t b = a + 1; b < out.vars.size(); ++b)
            if (out.vars[a] == out.vars[b])
                input_error("bad_variable", "duplicate variable '" + out.vars[a] + "'");

    if (j.contains("ring")) out.ring_relations = string_list(j["ring"], "ring");
    if (j.contains("module")) out.module_relations = string_list(j["module"], "module");
    if (j.contains("q")) out.q_gens = string_list(j["q"], "q");

    if (j.contains("head")) {
        if (!j["head"].is_array()) input_error("bad_field", "'head' must be an array");
        for (const auto& t : j["head"]) out.head.push_back(string_list(t, "head"));
    }

    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned())
            input_error("bad_field", "'seed' must be a nonnegative integer");
        out.seed = j["seed"].get<uint64_t>();
    }
    if (j.contains("window")) {
        if (!j["window"].is_number_integer() || j["window"].get<int64_t>() < 1 ||
            j["window"].get<int64_t>() > 64)
            input_error("bad_field", "'window' must be an integer in [1, 64]");
        out.window = j["window"].get<int>();
    }
    if (j.contains("max_index")) {
        if (!j["max_index"].is_number_integer() || j["max_index"].get<int64_t>() < 4 ||
            j["max_index"].get<int64_t>() > 100000)
            input_error("bad_field", "'max_index' must be an integer in [4, 100000]");
        out.max_index = j["max_index"].get<int64_t>();
    }
    if (j.contains("checks")) out.checks = string_list(j["checks"], "checks");

    const char* known[] = {"name", "field",  "vars",   "ring",      "module",
                           "q",    "head",   "seed",   "window",    "max_index",
                           "checks"};
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : known)
            if (it.key() == k) ok = true;
        if (!ok) input_error("unknown_field", "unknown job field '" + it.key() + "'");
    }
    return out;
}

job job_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) input_error("bad_file", "cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        input_error("bad_json", std::string("invalid JSON in '") + path + "': " + e.what());
    }
    job out = job_from_json(j);
    if (!j.contains("name")) {
        // default name: file stem
        size_t slash = path.find_last_of("/\\");
        std::string stem = (slash == std::string::npos) ? path : path.substr(slash + 1);
        size_t dot = stem.find('.');
        out.name = (dot == std::string::npos) ? stem : stem.substr(0, dot);
    }
    return out;
}

nlohmann::ordered_json job_to_json(const job& j) {
    nlohmann::ordered_json o;
    o["name"] = j.name;
    o["field"] = nlohmann::ordered_json::object();
    o["field"]["kind"] = (j.field.kind == field_kind::prime) ? "prime" : "rationals";
    if (j.field.kind == field_kind::prime) o["field"]["p"] = j.field.p;
    o["vars"] = j.vars;
    o["ring"] = j.ring_relations;
    if (!j.module_relations.empty()) o["module"] = j.module_relations;
    o["q"] = j.q_gens;
    o["head"] = j.head;
    if (j.seed) o["seed"] = *j.seed;
    o["window"] = j.window;
    o["max_index"] = j.max_index;
    if (!j.checks.empty()) o["checks"] = j.checks;
    return o;
}

} // namespace chern

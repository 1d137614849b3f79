#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "chern/corpus.hpp"
#include "chern/parser.hpp"
#include "chern/pipeline.hpp"

namespace {

uint64_t parse_seed_text(const std::string& s) {
    if (s.empty()) chern::input_error("bad_seed", "empty seed");
    uint64_t v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') chern::input_error("bad_seed", "seed must be a nonnegative integer");
        uint64_t d = uint64_t(c - '0');
        if (v > (UINT64_MAX - d) / 10) chern::input_error("bad_seed", "seed out of range");
        v = v * 10 + d;
    }
    return v;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

int cmd_analyze(const std::string& job_path, const std::string& json_out, bool have_seed,
                uint64_t seed, int window, int64_t max_index, const std::string& checks_csv) {
    chern::job jb = chern::job_from_file(job_path);
    if (have_seed)
        jb.seed = seed;
    else if (!jb.seed)
        if (const char* env = std::getenv("CHERN_SEED")) jb.seed = parse_seed_text(env);
    if (window > 0) jb.window = window;
    if (max_index > 0) jb.max_index = max_index;
    if (!checks_csv.empty()) jb.checks = split_csv(checks_csv);

    chern::run_result res = chern::run_job(jb);
    std::string rendered = res.report.dump(2) + "\n";
    if (json_out.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(json_out);
        if (!out) chern::input_error("bad_file", "cannot write '" + json_out + "'");
        out << rendered;
    }
    return int(res.code);
}

template <class K>
int print_parsed(const std::string& expr, const chern::ring_ptr& S) {
    std::cout << chern::parse_poly<K>(expr, S).str() << "\n";
    return 0;
}

int cmd_parse(const std::string& expr, const std::string& job_path) {
    chern::job jb = chern::job_from_file(job_path);
    chern::ring_ptr S = chern::make_ring_desc(jb.vars, jb.field);
    if (jb.field.kind == chern::field_kind::prime) return print_parsed<chern::fp_scalar>(expr, S);
    return print_parsed<chern::rat_scalar>(expr, S);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hilbert coefficients, superficial sequences and Sally-module"
                 " data for good filtrations on graded quotient rings"};
    app.require_subcommand(1);

    std::string job_path, json_out, checks_csv, corpus_dir, out_dir, expr;
    uint64_t seed = 0;
    int window = 0, jobs = 1;
    int64_t max_index = 0;

    CLI::App* analyze = app.add_subcommand("analyze", "run the checks on one job file");
    analyze->add_option("job", job_path, "job file (JSON)")->required();
    analyze->add_option("--json", json_out, "write the report here instead of stdout");
    CLI::Option* seed_opt = analyze->add_option("--seed", seed, "override the random seed");
    analyze->add_option("--window", window, "certification window for every stage");
    analyze->add_option("--max-index", max_index, "truncation ceiling for certification");
    analyze->add_option("--checks", checks_csv, "comma-separated list of check ids");

    CLI::App* corpus = app.add_subcommand("corpus", "run every job in a directory");
    corpus->add_option("dir", corpus_dir, "directory with *.job.json files")->required();
    corpus->add_option("--jobs", jobs, "run this many jobs in parallel");
    corpus->add_option("--out", out_dir, "write snapshots here instead of comparing");

    CLI::App* parse = app.add_subcommand("parse", "canonicalize one polynomial expression");
    parse->add_option("expr", expr, "polynomial expression")->required();
    parse->add_option("--job", job_path, "job file supplying ring and field")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : int(chern::outcome::input_error);
    }

    try {
        if (analyze->parsed())
            return cmd_analyze(job_path, json_out, seed_opt->count() > 0, seed, window,
                               max_index, checks_csv);
        if (corpus->parsed())
            return chern::corpus_run(corpus_dir, {jobs, out_dir}, std::cout);
        return cmd_parse(expr, job_path);
    } catch (const chern::engine_error& e) {
        std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
        return int(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error [unexpected]: " << e.what() << "\n";
        return int(chern::outcome::inconsistent);
    }
}

#include "chern/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "chern/pipeline.hpp"
#include "chern/report.hpp"

namespace chern {

namespace fs = std::filesystem;

namespace {

constexpr const char* job_suffix = ".job.json";
constexpr const char* expected_suffix = ".expected.json";

struct job_outcome {
    std::string line;
    int status = 0;
    std::string snapshot; // rendered report when writing snapshots
};

std::string read_file(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

job_outcome run_one(const fs::path& file, bool write_mode) {
    std::string stem = file.filename().string();
    stem.resize(stem.size() - std::string(job_suffix).size());
    job_outcome out;
    try {
        job jb = job_from_file(file.string());
        run_result res = run_job(jb);
        if (res.code != outcome::ok) {
            out.status = int(res.code);
            std::string msg = res.report.contains("error")
                                  ? res.report["error"]["message"].get<std::string>()
                                  : "checks reported an inconsistency";
            out.line = "ERROR " + stem + ": " + msg;
            return out;
        }
        strip_timings(res.report);
        std::string rendered = res.report.dump(2) + "\n";
        if (write_mode) {
            out.snapshot = rendered;
            out.line = "WROTE " + stem;
            return out;
        }
        fs::path expected = file.parent_path() / (stem + expected_suffix);
        if (!fs::exists(expected)) {
            out.status = int(outcome::input_error);
            out.line = "ERROR " + stem + ": missing snapshot " + expected.filename().string();
            return out;
        }
        if (read_file(expected) != rendered) {
            out.status = int(outcome::inconsistent);
            out.line = "DIFF " + stem;
            return out;
        }
        out.line = "PASS " + stem;
    } catch (const engine_error& e) {
        out.status = int(e.kind());
        out.line = "ERROR " + stem + ": [" + e.code() + "] " + e.what();
    } catch (const std::exception& e) {
        out.status = int(outcome::inconsistent);
        out.line = "ERROR " + stem + ": " + e.what();
    }
    return out;
}

} // namespace

int corpus_run(const std::string& dir, const corpus_options& opt, std::ostream& log) {
    if (!fs::is_directory(dir)) {
        log << "ERROR not a directory: " << dir << "\n";
        return int(outcome::input_error);
    }
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir)) {
        std::string name = e.path().filename().string();
        if (name.size() > std::string(job_suffix).size() &&
            name.rfind(job_suffix) == name.size() - std::string(job_suffix).size())
            files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) {
        log << "WARN no job files in " << dir << "\n";
        return 0;
    }

    bool write_mode = !opt.out_dir.empty();
    if (write_mode) fs::create_directories(opt.out_dir);

    std::vector<job_outcome> results(files.size());
    int n = int(files.size());
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, opt.jobs)) \
    if (opt.jobs > 1)
    for (int i = 0; i < n; ++i) results[i] = run_one(files[i], write_mode);

    int status = 0;
    for (int i = 0; i < n; ++i) {
        log << results[i].line << "\n";
        status = std::max(status, results[i].status);
        if (write_mode && !results[i].snapshot.empty()) {
            std::string stem = files[i].filename().string();
            stem.resize(stem.size() - std::string(job_suffix).size());
            std::ofstream outf(fs::path(opt.out_dir) / (stem + expected_suffix));
            outf << results[i].snapshot;
        }
    }
    log << files.size() << " jobs, worst status " << status << "\n";
    return status;
}

} // namespace chern

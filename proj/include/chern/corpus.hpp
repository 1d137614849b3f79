#ifndef CHERN_CORPUS_HPP
#define CHERN_CORPUS_HPP

#include <iosfwd>
#include <string>

namespace chern {

// Batch mode over a directory of <name>.job.json files.  Without out_dir each
// report (timings removed) is compared byte-for-byte against the snapshot in
// <name>.expected.json next to the job; with out_dir fresh snapshots are
// written there instead.  Returns the process exit status (worst job wins).
struct corpus_options {
    int jobs = 1;
    std::string out_dir;
};

int corpus_run(const std::string& dir, const corpus_options& opt, std::ostream& log);

} // namespace chern

#endif

#ifndef CHERN_PIPELINE_HPP
#define CHERN_PIPELINE_HPP

#include "chern/job.hpp"

#include "json.hpp"

#include "chern/error.hpp"

namespace chern {

struct run_result {
    nlohmann::ordered_json report;
    outcome code = outcome::ok;
};

// run one job end to end; every engine_error is folded into an error report
// and the matching exit status instead of escaping
run_result run_job(const job& jb);

} // namespace chern

#endif

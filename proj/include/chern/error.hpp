#ifndef CHERN_ERROR_HPP
#define CHERN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace chern {

// Exit-status contract of the engine:
//   0 all checks consistent, 2 malformed input, 3 a certification window or
//   genericity budget was exhausted, 4 a mechanically verified statement failed
//   (which means a bug somewhere, never a property of valid input).
enum class outcome : int {
    ok            = 0,
    input_error   = 2,
    certification = 3,
    inconsistent  = 4,
};

class engine_error : public std::runtime_error {
public:
    engine_error(outcome kind, std::string code, const std::string& what)
        : std::runtime_error(what), kind_(kind), code_(std::move(code)) {}

    outcome kind() const { return kind_; }
    // short machine-readable tag, e.g. "parse_error", "q_not_equigenerated"
    const std::string& code() const { return code_; }

private:
    outcome kind_;
    std::string code_;
};

[[noreturn]] inline void input_error(const std::string& code, const std::string& msg) {
    throw engine_error(outcome::input_error, code, msg);
}

[[noreturn]] inline void certification_error(const std::string& code, const std::string& msg) {
    throw engine_error(outcome::certification, code, msg);
}

[[noreturn]] inline void inconsistency(const std::string& code, const std::string& msg) {
    throw engine_error(outcome::inconsistent, code, msg);
}

// internal arithmetic guards (overflow etc.) — also a bug signal, never data
[[noreturn]] inline void internal_error(const std::string& msg) {
    throw engine_error(outcome::inconsistent, "internal", msg);
}

} // namespace chern

#endif

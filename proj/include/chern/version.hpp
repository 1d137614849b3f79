#ifndef CHERN_VERSION_HPP
#define CHERN_VERSION_HPP

namespace chern {

inline constexpr const char* engine_version = "0.1.0";

} // namespace chern

#endif

#ifndef JACSPEC_VERSION_HPP
#define JACSPEC_VERSION_HPP

namespace jacspec {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace jacspec

#endif

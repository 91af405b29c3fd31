#ifndef CSCORE_VERSION_HPP
#define CSCORE_VERSION_HPP

namespace cscore {
inline constexpr const char* kVersion = "0.1.0";
}

#endif  // CSCORE_VERSION_HPP

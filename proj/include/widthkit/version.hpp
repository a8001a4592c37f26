#ifndef WIDTHKIT_VERSION_HPP
#define WIDTHKIT_VERSION_HPP

namespace widthkit {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kToolName = "widthkit";

}  // namespace widthkit

#endif

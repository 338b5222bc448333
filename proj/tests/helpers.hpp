#pragma once

#include <functional>
#include <string>

#include "hda/common.hpp"

namespace helpers {

// True when fn throws hda::Error of the given kind whose message
// contains needle (empty needle: any message).
inline bool throws_kind(hda::ErrorKind kind, const std::function<void()>& fn,
                        const std::string& needle = "") {
  try {
    fn();
  } catch (const hda::Error& e) {
    if (e.kind() != kind) return false;
    return needle.empty() ||
           std::string(e.what()).find(needle) != std::string::npos;
  } catch (...) {
    return false;
  }
  return false;
}

inline bool contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

inline bool report_mentions(const hda::ValidationReport& r,
                            const std::string& needle) {
  return contains(r.to_string(), needle);
}

}  // namespace helpers

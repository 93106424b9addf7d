#pragma once

#include <string>
#include <vector>

namespace betaring {

/// Info lines carry data without pass/fail meaning.
enum class Status { Pass, Fail, Info };

struct CheckItem {
  std::string identity;
  Status status = Status::Info;
  std::string witness;
};

using Report = std::vector<CheckItem>;

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Info: return "info";
  }
  return "?";
}

inline void expect(Report& r, std::string identity, bool ok, std::string witness = {}) {
  r.push_back({std::move(identity), ok ? Status::Pass : Status::Fail, std::move(witness)});
}

/// No item failed.
inline bool passed(const Report& r) {
  for (const auto& i : r)
    if (i.status == Status::Fail) return false;
  return true;
}

inline void append(Report& into, const Report& from) {
  into.insert(into.end(), from.begin(), from.end());
}

}  // namespace betaring

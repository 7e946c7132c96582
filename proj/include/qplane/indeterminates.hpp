#pragma once

#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "qplane/errors.hpp"

namespace qplane {

/// Process-wide interning table for indeterminate names. The table is
/// append-only: indices never move, so values built earlier stay valid.
/// "q" is always index 0; every other indeterminate is ordered by first
/// registration, which is what the graded-lex monomial order uses.
class Indeterminates {
 public:
  static Indeterminates& instance() {
    static Indeterminates table;
    return table;
  }

  int intern(const std::string& name) {
    if (name.empty()) fail(Errc::ParseError, "empty indeterminate name");
    std::lock_guard<std::mutex> lock(mu_);
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    int idx = static_cast<int>(names_.size());
    names_.push_back(name);
    index_.emplace(name, idx);
    return idx;
  }

  // -1 when the name was never registered.
  int find(const std::string& name) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
  }

  std::string name(int idx) const {
    std::lock_guard<std::mutex> lock(mu_);
    return names_.at(static_cast<size_t>(idx));
  }

  int size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return static_cast<int>(names_.size());
  }

 private:
  Indeterminates() : names_{"q"} { index_.emplace("q", 0); }
  mutable std::mutex mu_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

constexpr int kVarQ = 0;

inline int var(const std::string& name) { return Indeterminates::instance().intern(name); }
inline std::string var_name(int idx) { return Indeterminates::instance().name(idx); }

}  // namespace qplane

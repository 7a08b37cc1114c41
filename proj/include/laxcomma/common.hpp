#pragma once

#include <cstdlib>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace laxcomma {

// Joins arbitrary streamable pieces into one string; used for error witnesses.
template <typename... Ts>
std::string str(const Ts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

// Validation outcome: either a value or a list of law violations, each with a witness.
template <typename T>
struct Result {
  std::optional<T> value;
  std::vector<std::string> errors;

  bool ok() const { return errors.empty() && value.has_value(); }
  const T& operator*() const { return *value; }
  const T* operator->() const { return &*value; }
};

template <typename T>
Result<T> ok_result(T v) {
  Result<T> r;
  r.value = std::move(v);
  return r;
}

template <typename T>
Result<T> fail_result(std::vector<std::string> errors) {
  Result<T> r;
  r.errors = std::move(errors);
  return r;
}

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Node counter for the exhaustive searches. Guards against accidentally
// unbounded sweeps; the cap comes from LAXCOMMA_MAX_SEARCH (default 1e7).
struct SearchBudget {
  long long limit;
  long long used = 0;

  explicit SearchBudget(long long limit_) : limit(limit_) {}

  void tick(long long n = 1) {
    used += n;
    if (used > limit)
      throw BudgetExceeded(str("search budget exceeded: ", used, " > ", limit, " nodes"));
  }
};

inline long long max_search_nodes() {
  if (const char* env = std::getenv("LAXCOMMA_MAX_SEARCH")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return 10'000'000;
}

inline SearchBudget make_default_budget() { return SearchBudget(max_search_nodes()); }

}  // namespace laxcomma

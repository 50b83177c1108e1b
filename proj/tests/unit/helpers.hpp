#pragma once

#include <initializer_list>
#include <string>

#include "doob/doob.hpp"

namespace doob::testing {

inline VertexSet set_of(const DoobParams& p, std::initializer_list<const char*> vertices) {
  VertexSet s(p);
  for (const char* v : vertices) s.insert(parse_vertex(p, v));
  return s;
}

inline VertexSet sh_set(std::initializer_list<const char*> vertices) { return set_of(DoobParams(1, 0), vertices); }

/// {(a,b) : pred(a,b)} in Sh.
template <typename Pred>
VertexSet sh_where(Pred pred) {
  VertexSet s(DoobParams(1, 0));
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      if (pred(a, b)) s.insert(static_cast<VertexIndex>(4 * a + b));
    }
  }
  return s;
}

/// Sets an environment variable for the lifetime of the guard.
class EnvGuard {
 public:
  EnvGuard(const char* name, const char* value);
  ~EnvGuard();
  EnvGuard(const EnvGuard&) = delete;
  EnvGuard& operator=(const EnvGuard&) = delete;

 private:
  std::string name_;
  std::string old_;
  bool had_ = false;
};

}  // namespace doob::testing

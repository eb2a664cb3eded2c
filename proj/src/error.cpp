#include "wildcount/error.hpp"
#include "wildcount/rational.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace wildcount {

std::string ScaleGuardExceeded::format_size(long double v) {
  std::ostringstream os;
  if (v < 1e15L) {
    os << static_cast<unsigned long long>(std::llround(v));
  } else {
    os.precision(4);
    os << static_cast<double>(v);
  }
  return os.str();
}

long double scale_guard() {
  if (const char* env = std::getenv("WILDCOUNT_SCALE_GUARD")) {
    char* end = nullptr;
    long double v = std::strtold(env, &end);
    if (end != env && v > 0) return v;
  }
  return 1e9L;
}

void check_scale(const std::string& what, long double required, long double limit) {
  // The environment override is expert mode: it replaces the per-operation limits too.
  long double guard = std::getenv("WILDCOUNT_SCALE_GUARD") ? scale_guard() : limit;
  if (required > guard) throw ScaleGuardExceeded(what, required);
}

Rational parse_rational(const std::string& s) {
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
      std::size_t used = 0;
      long long n = std::stoll(s, &used);
      if (used != s.size()) throw UserError("bad rational");
      return Rational(n);
    }
    std::size_t u1 = 0, u2 = 0;
    std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
    long long n = std::stoll(ns, &u1);
    long long d = std::stoll(ds, &u2);
    if (u1 != ns.size() || u2 != ds.size() || d == 0) throw UserError("bad rational");
    return Rational(n, d);
  } catch (const std::logic_error&) {
    throw UserError("cannot parse rational '" + s + "'");
  } catch (const UserError&) {
    throw UserError("cannot parse rational '" + s + "'");
  }
}

}  // namespace wildcount

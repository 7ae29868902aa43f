#ifndef PGONAL_ERRORS_HPP
#define PGONAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pgonal {

// Base class for everything this library throws on purpose.
class error : public std::runtime_error {
  public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Bad user-supplied data: malformed files, reducible minimal polynomials,
// weights out of range, mismatched fields, contract violations.
class invalid_input : public error {
  public:
    explicit invalid_input(const std::string& what) : error(what) {}
};

// A structural invariant the pipeline relies on failed to hold.  Signals a
// bug upstream, never a mathematical outcome.
class invariant_violation : public error {
  public:
    explicit invariant_violation(const std::string& what) : error(what) {}
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw invalid_input(what);
}

inline void ensure(bool cond, const std::string& what) {
    if (!cond) throw invariant_violation(what);
}

}  // namespace pgonal

#endif

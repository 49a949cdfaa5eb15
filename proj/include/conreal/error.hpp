#ifndef CONREAL_ERROR_HPP
#define CONREAL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace conreal {

// Error taxonomy mirrors the CLI exit codes:
//   bad_input -> 2, unsupported/cap_exceeded -> 3, not_c_real -> 1.
enum class errc {
    bad_input,
    singular_matrix,
    division_by_zero,
    unsupported,
    cap_exceeded,
    not_c_real,
    internal
};

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

// Always-on internal consistency check (certificates are verified at
// construction, independent of NDEBUG).
inline void check(bool ok, const char* what) {
    if (!ok) throw error(errc::internal, std::string("internal check failed: ") + what);
}

} // namespace conreal

#endif

#ifndef KF_RATIONAL_HPP
#define KF_RATIONAL_HPP

// Exact arbitrary-precision integers and rationals used throughout the
// library.  No floating point appears anywhere: linking-matrix determinants
// and domain multiplicities must be exact.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace kf {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Error with a coarse category so the CLI can map failures to exit codes:
// `bad_input` for malformed files/arguments (exit 2), `computation` for
// well-formed requests that cannot be completed (exit 1).
class Error : public std::runtime_error {
public:
    enum class Kind { computation, bad_input };

    Error(Kind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    Kind kind() const { return kind_; }

    static Error computation(const std::string& message) {
        return Error(Kind::computation, message);
    }
    static Error bad_input(const std::string& message) {
        return Error(Kind::bad_input, message);
    }

private:
    Kind kind_;
};

inline Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// Exact conversion; throws when r is not an integer.
inline Int to_integer(const Rat& r) {
    if (!is_integer(r))
        throw Error::computation("expected an integer, got " + r.str());
    return numerator(r);
}

} // namespace kf

#endif // KF_RATIONAL_HPP

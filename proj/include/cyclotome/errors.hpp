#ifndef CYCLOTOME_ERRORS_HPP
#define CYCLOTOME_ERRORS_HPP

#include <stdexcept>

namespace cyclotome {

// Exact division found a nonzero remainder coefficient. The library only
// divides where theory guarantees exactness, so this signals a logic error
// in the caller.
struct NotDivisible : std::domain_error {
    using std::domain_error::domain_error;
};

// Series inversion requires a unit (+1/-1) constant coefficient.
struct NotInvertible : std::domain_error {
    using std::domain_error::domain_error;
};

// An operation restricted to odd squarefree indices of sufficient order was
// called outside its domain.
struct NotAdmissible : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Divisor-subset enumeration would exceed the caller-supplied limit.
struct TooManyDivisors : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace cyclotome

#endif

#pragma once

#include <stdexcept>
#include <string>

namespace cartan {

// Bad input: an out-of-range size, a nonpositive parameter, an unparsable
// domain or rational literal.
class invalid_parameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Evaluation of a rational function at a zero of one of its denominator
// factors.
class pole_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// An operation whose precondition is a convergence or domain-membership
// statement was called outside it.
class precondition_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// The weighted Hilbert space is {0}: no epsilon function exists.
class triviality_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class quadrature_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class truncation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two independent derivations of the same verdict disagreed. Never expected
// to fire; its presence is what makes the cross-check meaningful.
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace cartan

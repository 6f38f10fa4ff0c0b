#pragma once

#include <stdexcept>
#include <string>

namespace kapteyn
{

// Argument outside the mathematical domain of an operation (negative order,
// index out of range, non-integer order in exact mode, ...).
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// An iterative summation hit its term budget before the tail criterion held.
class NonConvergence : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// A closed-form generator was asked for an index above its configured bound.
class BoundExceeded : public std::out_of_range
{
public:
    using std::out_of_range::out_of_range;
};

// A polynomial division that must be exact left a remainder.
class InexactDivision : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

// A numerator extraction found nonzero coefficients in its guard window.
class NonTerminating : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

} // namespace kapteyn

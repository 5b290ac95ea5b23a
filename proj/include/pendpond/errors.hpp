#ifndef PENDPOND_ERRORS_HPP
#define PENDPOND_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pendpond {

// Root of everything the library throws on purpose.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A coefficient or index was requested beyond what the data provably knows.
class truncation_error : public error {
public:
    using error::error;
};

class ring_mismatch : public error {
public:
    using error::error;
};

class not_invertible : public error {
public:
    using error::error;
};

class parse_error : public error {
public:
    using error::error;
};

// Arguments outside an operation's domain (bad level, bad prime, ...).
class domain_error : public error {
public:
    using error::error;
};

class reduction_error : public error {
public:
    using error::error;
};

class precision_error : public error {
public:
    using error::error;
};

} // namespace pendpond

#endif

#pragma once

#include <stdexcept>
#include <string>

namespace fptlab {

/// Malformed or inconsistent experiment input. Maps to CLI exit code 1.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
    config_error(const std::string& what, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_ = 0;
};

/// Any failure of a numerical procedure. Maps to CLI exit code 2.
class numerical_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class domain_error : public numerical_error {
public:
    using numerical_error::numerical_error;
};

class unsupported_family_error : public numerical_error {
public:
    using numerical_error::numerical_error;
};

class underflow_error : public numerical_error {
public:
    using numerical_error::numerical_error;
};

class embedding_error : public numerical_error {
public:
    using numerical_error::numerical_error;
};

class instability_error : public numerical_error {
public:
    using numerical_error::numerical_error;
};

class start_above_boundary_error : public numerical_error {
public:
    start_above_boundary_error(const std::string& what, std::size_t path)
        : numerical_error(what), path_(path) {}
    std::size_t path_index() const noexcept { return path_; }

private:
    std::size_t path_;
};

class insufficient_support_error : public numerical_error {
public:
    using numerical_error::numerical_error;
};

class empty_input_error : public numerical_error {
public:
    using numerical_error::numerical_error;
};

class disjoint_support_error : public numerical_error {
public:
    using numerical_error::numerical_error;
};

class missing_file_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace fptlab

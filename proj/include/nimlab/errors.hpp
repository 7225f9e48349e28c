#pragma once

#include <stdexcept>
#include <string>

namespace nimlab {

// Thrown when a computation would exceed a configured visit or memory cap.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

class cache_error : public std::runtime_error {
public:
    explicit cache_error(const std::string& what) : std::runtime_error(what) {}
};

class cache_header_error : public cache_error {
public:
    explicit cache_header_error(const std::string& what) : cache_error(what) {}
};

class cache_version_error : public cache_error {
public:
    explicit cache_version_error(const std::string& what) : cache_error(what) {}
};

class cache_parse_error : public cache_error {
public:
    cache_parse_error(long long line, const std::string& what)
        : cache_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    long long line() const { return line_; }

private:
    long long line_;
};

class cache_truncated_error : public cache_error {
public:
    explicit cache_truncated_error(const std::string& what) : cache_error(what) {}
};

class cache_variant_error : public cache_error {
public:
    explicit cache_variant_error(const std::string& what) : cache_error(what) {}
};

}  // namespace nimlab

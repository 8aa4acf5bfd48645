#pragma once

#include <stdexcept>
#include <string>

namespace octavia {

enum class Status : int {
    Ok = 0,
    InvalidArgument = 1,
    DimensionMismatch = 2,
    DomainError = 3,
    NotCoprime = 4,
    SearchFailed = 5,
    Overflow = 6,
    IoError = 7,
    Internal = 8,
};

class Error : public std::runtime_error {
public:
    Error(Status status, const std::string& what) : std::runtime_error(what), status_(status) {}
    Status status() const noexcept { return status_; }

private:
    Status status_;
};

[[noreturn]] inline void fail(Status s, const std::string& msg) { throw Error(s, msg); }

inline void require(bool ok, Status s, const char* msg) {
    if (!ok) fail(s, msg);
}

}  // namespace octavia

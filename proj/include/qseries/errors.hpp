#pragma once

#include <stdexcept>
#include <string>

namespace qseries
{

// Base of every error raised by the library.
class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the domain of an arithmetic or combinatorial function.
class domain_error : public error
{
public:
    using error::error;
};

class division_by_non_unit : public error
{
public:
    using error::error;
};

class log_of_non_one : public error
{
public:
    using error::error;
};

class exp_of_non_zero : public error
{
public:
    using error::error;
};

// Brute-force enumeration requested above the configured weight cap.
class oracle_limit_exceeded : public error
{
public:
    using error::error;
};

} // namespace qseries

#pragma once

#include <stdexcept>
#include <string>

namespace sgqi {

// Requested node count exceeds the configured budget.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or inconsistent experiment configuration.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// Evaluation at a point where the quantity is singular (e.g. density at a
// boundary where the transform derivative vanishes).
class singularity_error : public std::domain_error {
public:
    explicit singularity_error(const std::string& what) : std::domain_error(what) {}
};

// Non-finite sample value encountered while ingesting data.
class data_error : public std::runtime_error {
public:
    explicit data_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace sgqi

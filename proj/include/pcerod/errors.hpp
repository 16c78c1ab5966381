#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace pcerod {

// Base class for toolkit errors. `kind()` is a stable, machine-readable
// class string; the CLI prints it as the first token of its error line.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& m) : Error("domain", m) {}
};

class ArgumentError : public Error {
public:
    explicit ArgumentError(const std::string& m) : Error("argument", m) {}
};

class CapacityError : public Error {
public:
    explicit CapacityError(const std::string& m) : Error("capacity", m) {}
};

class RangeError : public Error {
public:
    explicit RangeError(const std::string& m) : Error("range", m) {}
};

class DegenerateInputError : public Error {
public:
    explicit DegenerateInputError(const std::string& m) : Error("degenerate-input", m) {}
};

class UnderdeterminedError : public Error {
public:
    explicit UnderdeterminedError(const std::string& m) : Error("underdetermined", m) {}
};

// Carries the condition estimate of the offending system.
class ConditioningError : public Error {
public:
    ConditioningError(const std::string& m, double condition_estimate)
        : Error("conditioning", m), condition_(condition_estimate) {}

    double condition_estimate() const noexcept { return condition_; }

private:
    double condition_;
};

class SimulationError : public Error {
public:
    SimulationError(const std::string& m, double time_s)
        : Error("simulation", m), time_s_(time_s) {}

    double time_s() const noexcept { return time_s_; }

private:
    double time_s_;
};

class TemplateError : public Error {
public:
    TemplateError(const std::string& m, std::string placeholder)
        : Error("template", m), placeholder_(std::move(placeholder)) {}

    const std::string& placeholder() const noexcept { return placeholder_; }

private:
    std::string placeholder_;
};

class StageOrderError : public Error {
public:
    StageOrderError(const std::string& m, std::string missing_path)
        : Error("stage-order", m), missing_path_(std::move(missing_path)) {}

    const std::string& missing_path() const noexcept { return missing_path_; }

private:
    std::string missing_path_;
};

class FitError : public Error {
public:
    explicit FitError(const std::string& m) : Error("fit", m) {}
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& m) : Error("config", m) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& m) : Error("io", m) {}
};

}  // namespace pcerod

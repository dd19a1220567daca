#ifndef GALMODEL_ERRORS_HH
#define GALMODEL_ERRORS_HH

#include <stdexcept>
#include <string>

namespace galmodel {

/// malformed or rejected input (exit code 2)
struct InputError : std::runtime_error {
    int line = -1;
    int col = -1;
    InputError(const std::string& msg, int line_ = -1, int col_ = -1)
        : std::runtime_error(msg), line(line_), col(col_) {}
};

/// a configured budget or cap was exhausted; the result is incomplete (exit code 4)
struct BudgetError : std::runtime_error {
    long limit;
    BudgetError(const std::string& msg, long limit_) : std::runtime_error(msg), limit(limit_) {}
};

/// a kernel self-check failed; never expected on valid builds (exit code 5)
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace galmodel

#endif

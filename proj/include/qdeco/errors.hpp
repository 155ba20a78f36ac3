#ifndef QDECO_ERRORS_HPP
#define QDECO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qdeco {

// Malformed input files (DIMACS / edge list). Maps to exit code 3 in the CLI.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal size limit was exceeded (e.g. exact solver capacity). Exit code 4.
class LimitError : public std::runtime_error {
public:
    explicit LimitError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace qdeco

#endif // QDECO_ERRORS_HPP

#ifndef QDECO_NAMES_HPP
#define QDECO_NAMES_HPP

#include <set>
#include <string>

#include "qdeco/decomposer.hpp"

namespace qdeco {

// String forms shared by the CLI flags, CSV columns and JSON documents.
// Parsers throw std::invalid_argument on unknown names.

std::string to_string(Problem p);
std::string to_string(Selection s);
std::string to_string(BoundFamily b);
std::string to_string(IncumbentSource s);
std::string to_string(Traversal t);
std::string to_string(Reduction r);
std::string to_string(LeafSolver::Kind k);

Problem parse_problem(const std::string& name);
Selection parse_selection(const std::string& name);
BoundFamily parse_bound_family(const std::string& name);
IncumbentSource parse_incumbent_source(const std::string& name);
LeafSolver::Kind parse_solver_kind(const std::string& name);

// Comma-separated reduction list; "none" (or empty) yields the empty set.
std::set<Reduction> parse_reductions(const std::string& list);
// "+"-joined names in a fixed order, or "none".
std::string reductions_to_string(const std::set<Reduction>& reductions);

} // namespace qdeco

#endif // QDECO_NAMES_HPP

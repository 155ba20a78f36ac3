#ifndef QDECO_QUBO_HPP
#define QDECO_QUBO_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qdeco/graph.hpp"

namespace qdeco {

// Total or partial 0/1 assignment, keyed by variable id.
struct Assignment {
    std::map<int, int> values;

    bool operator==(const Assignment&) const = default;
};

// Spin form of a quadratic objective: offset + sum h_i s_i + sum J_ij s_i s_j
// with s_i in {-1,+1}.
struct IsingModel {
    std::map<int, double> fields;
    std::map<std::pair<int, int>, double> couplings;
    double offset = 0.0;
};

/// Quadratic pseudo-Boolean objective
///     H(x) = offset + sum_i a_i x_i + sum_{i<j} a_ij x_i x_j,  x_i in {0,1}.
/// Variable ids stay stable across transformations: probing a variable
/// removes it from the active set and folds its terms into the survivors,
/// so fixings always refer to the ids (and vertex labels) of the model the
/// caller built. Zero coefficients are never stored. Transformations return
/// new values; a Qubo is safe to share across threads.
class Qubo {
public:
    Qubo() = default;

    // n active variables with ids 0..n-1 carrying the given labels.
    static Qubo with_vars(std::vector<int> var_labels);

    int num_vars() const { return static_cast<int>(vars_.size()); }
    const std::vector<int>& vars() const { return vars_; }
    bool has_var(int var) const;
    int var_label(int var) const { return var_labels_.at(var); }

    double linear(int var) const;
    double quadratic(int i, int j) const;
    double offset() const { return offset_; }
    const std::map<int, double>& linear_terms() const { return linear_; }
    const std::map<std::pair<int, int>, double>& quadratic_terms() const { return quadratic_; }

    void add_linear(int var, double coeff);
    void add_quadratic(int i, int j, double coeff);
    void add_offset(double coeff) { offset_ += coeff; }

    // Exact objective value; the assignment must cover every active variable.
    double evaluate(const Assignment& a) const;

    // Substitutes x = (s+1)/2; values agree with evaluate on every corner.
    IsingModel to_ising() const;

    // Eliminates `var` at the given value. Fixing to 1 moves the linear term
    // to the offset and folds couplings into the partners' linear terms;
    // fixing to 0 drops every term touching the variable.
    Qubo probe(int var, int value) const;

    bool operator==(const Qubo&) const = default;

private:
    std::vector<int> vars_;                            // active ids, ascending
    std::map<int, double> linear_;
    std::map<std::pair<int, int>, double> quadratic_;  // keys (i,j) with i<j
    double offset_ = 0.0;
    std::map<int, int> var_labels_;
};

// Maximum-clique objective -A sum x_v + B sum_{(u,v) not in E} x_u x_v with
// A=1, B=2. Its minimum is -omega(g), attained on maximum cliques.
Qubo build_mc_qubo(const Graph& g);

// Vertex-cover objective A' sum_{(u,v) in E} (1-x_u)(1-x_v) + B' sum x_v with
// A'=2, B'=1, expanded into linear/quadratic/offset terms. Its minimum is
// |MVC(g)|, attained on minimum vertex covers.
Qubo build_mvc_qubo(const Graph& g);

// Weak-persistency fixings: single-variable dominance rules applied to a
// fixed point, folding each fixing with probe before rescanning. Every
// returned set of fixings extends to at least one global minimizer.
// Fix x_i = 0 when a_i + sum_j min(0, a_ij) >= 0, x_i = 1 when
// a_i + sum_j max(0, a_ij) <= 0 (equality fixes: the variable is then
// indifferent in some optimum).
Assignment persistencies(const Qubo& q);

// Text form: "vars N offset F", then "l i c" / "q i j c" lines in ascending
// id order. Used by the CLI's --dump-qubo.
std::string to_text(const Qubo& q);

} // namespace qdeco

#endif // QDECO_QUBO_HPP

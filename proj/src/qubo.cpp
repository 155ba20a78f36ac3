#include "qdeco/qubo.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace qdeco {
namespace {

std::string fmt_coeff(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

} // namespace

Qubo Qubo::with_vars(std::vector<int> var_labels) {
    Qubo q;
    q.vars_.resize(var_labels.size());
    for (std::size_t i = 0; i < var_labels.size(); ++i) {
        q.vars_[i] = static_cast<int>(i);
        q.var_labels_.emplace(static_cast<int>(i), var_labels[i]);
    }
    return q;
}

bool Qubo::has_var(int var) const {
    return std::binary_search(vars_.begin(), vars_.end(), var);
}

double Qubo::linear(int var) const {
    auto it = linear_.find(var);
    return it == linear_.end() ? 0.0 : it->second;
}

double Qubo::quadratic(int i, int j) const {
    if (i > j) std::swap(i, j);
    auto it = quadratic_.find({i, j});
    return it == quadratic_.end() ? 0.0 : it->second;
}

void Qubo::add_linear(int var, double coeff) {
    if (!has_var(var)) throw std::invalid_argument("unknown variable " + std::to_string(var));
    double& slot = linear_[var];
    slot += coeff;
    if (slot == 0.0) linear_.erase(var);
}

void Qubo::add_quadratic(int i, int j, double coeff) {
    if (i == j) throw std::invalid_argument("quadratic term needs two distinct variables");
    if (!has_var(i) || !has_var(j))
        throw std::invalid_argument("unknown variable in quadratic term (" + std::to_string(i) +
                                    "," + std::to_string(j) + ")");
    if (i > j) std::swap(i, j);
    double& slot = quadratic_[{i, j}];
    slot += coeff;
    if (slot == 0.0) quadratic_.erase({i, j});
}

double Qubo::evaluate(const Assignment& a) const {
    for (int var : vars_)
        if (!a.values.count(var))
            throw std::invalid_argument("assignment is missing variable " + std::to_string(var));
    double value = offset_;
    for (const auto& [var, coeff] : linear_) value += coeff * a.values.at(var);
    for (const auto& [key, coeff] : quadratic_)
        value += coeff * a.values.at(key.first) * a.values.at(key.second);
    return value;
}

IsingModel Qubo::to_ising() const {
    IsingModel m;
    m.offset = offset_;
    for (const auto& [var, coeff] : linear_) {
        m.offset += coeff / 2.0;
        m.fields[var] += coeff / 2.0;
    }
    for (const auto& [key, coeff] : quadratic_) {
        m.offset += coeff / 4.0;
        m.fields[key.first] += coeff / 4.0;
        m.fields[key.second] += coeff / 4.0;
        m.couplings[key] += coeff / 4.0;
    }
    std::erase_if(m.fields, [](const auto& kv) { return kv.second == 0.0; });
    std::erase_if(m.couplings, [](const auto& kv) { return kv.second == 0.0; });
    return m;
}

Qubo Qubo::probe(int var, int value) const {
    if (!has_var(var)) throw std::invalid_argument("unknown variable " + std::to_string(var));
    Qubo out = *this;
    out.vars_.erase(std::find(out.vars_.begin(), out.vars_.end(), var));
    if (value != 0) out.offset_ += out.linear(var);
    out.linear_.erase(var);
    for (auto it = out.quadratic_.begin(); it != out.quadratic_.end();) {
        const auto [i, j] = it->first;
        if (i == var || j == var) {
            if (value != 0) {
                int partner = (i == var) ? j : i;
                double& slot = out.linear_[partner];
                slot += it->second;
                if (slot == 0.0) out.linear_.erase(partner);
            }
            it = out.quadratic_.erase(it);
        } else {
            ++it;
        }
    }
    return out;
}

Qubo build_mc_qubo(const Graph& g) {
    Qubo q = Qubo::with_vars(g.labels());
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v) q.add_linear(v, -1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) q.add_quadratic(u, v, 2.0);
    return q;
}

Qubo build_mvc_qubo(const Graph& g) {
    Qubo q = Qubo::with_vars(g.labels());
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v) q.add_linear(v, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;
            // 2 (1 - x_u)(1 - x_v) = 2 - 2 x_u - 2 x_v + 2 x_u x_v
            q.add_offset(2.0);
            q.add_linear(u, -2.0);
            q.add_linear(v, -2.0);
            q.add_quadratic(u, v, 2.0);
        }
    return q;
}

Assignment persistencies(const Qubo& q) {
    Assignment fixed;
    Qubo cur = q;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int var : cur.vars()) {
            double lin = cur.linear(var);
            double min_sum = 0.0, max_sum = 0.0;
            for (const auto& [key, coeff] : cur.quadratic_terms()) {
                if (key.first != var && key.second != var) continue;
                min_sum += std::min(0.0, coeff);
                max_sum += std::max(0.0, coeff);
            }
            int value;
            if (lin + min_sum >= 0.0)
                value = 0;
            else if (lin + max_sum <= 0.0)
                value = 1;
            else
                continue;
            fixed.values[var] = value;
            cur = cur.probe(var, value);
            changed = true;
            break; // coefficients moved; rescan from the top
        }
    }
    return fixed;
}

std::string to_text(const Qubo& q) {
    std::string out = "vars " + std::to_string(q.num_vars()) + " offset " +
                      fmt_coeff(q.offset()) + "\n";
    for (const auto& [var, coeff] : q.linear_terms())
        out += "l " + std::to_string(var) + " " + fmt_coeff(coeff) + "\n";
    for (const auto& [key, coeff] : q.quadratic_terms())
        out += "q " + std::to_string(key.first) + " " + std::to_string(key.second) + " " +
               fmt_coeff(coeff) + "\n";
    return out;
}

} // namespace qdeco

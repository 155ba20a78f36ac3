#include "qdeco/names.hpp"

#include <sstream>
#include <stdexcept>

namespace qdeco {

std::string to_string(Problem p) {
    return p == Problem::MaxClique ? "mc" : "mvc";
}

std::string to_string(Selection s) {
    switch (s) {
        case Selection::LowDegree: return "low";
        case Selection::MedianDegree: return "median";
        case Selection::HighDegree: return "high";
        case Selection::Random: return "random";
    }
    return "?";
}

std::string to_string(BoundFamily b) {
    switch (b) {
        case BoundFamily::None: return "none";
        case BoundFamily::Chromatic: return "chromatic";
        case BoundFamily::Deterministic: return "deterministic";
        case BoundFamily::Both: return "both";
    }
    return "?";
}

std::string to_string(IncumbentSource s) {
    return s == IncumbentSource::Heuristic ? "heuristic" : "decomposition";
}

std::string to_string(Traversal t) {
    switch (t) {
        case Traversal::PlusFirst: return "plus-first";
        case Traversal::MinusFirst: return "minus-first";
        case Traversal::SmallerFirst: return "smaller-first";
    }
    return "?";
}

std::string to_string(Reduction r) {
    switch (r) {
        case Reduction::KCore: return "kcore";
        case Reduction::EdgeKCore: return "edge-kcore";
        case Reduction::Persistency: return "persistency";
        case Reduction::Nbvr: return "nbvr";
    }
    return "?";
}

std::string to_string(LeafSolver::Kind k) {
    return k == LeafSolver::Kind::Exact ? "exact" : "anneal";
}

Problem parse_problem(const std::string& name) {
    if (name == "mc") return Problem::MaxClique;
    if (name == "mvc") return Problem::MinVertexCover;
    throw std::invalid_argument("unknown problem '" + name + "' (expected mc or mvc)");
}

Selection parse_selection(const std::string& name) {
    if (name == "low") return Selection::LowDegree;
    if (name == "median") return Selection::MedianDegree;
    if (name == "high") return Selection::HighDegree;
    if (name == "random") return Selection::Random;
    throw std::invalid_argument("unknown selection '" + name + "'");
}

BoundFamily parse_bound_family(const std::string& name) {
    if (name == "none") return BoundFamily::None;
    if (name == "chromatic") return BoundFamily::Chromatic;
    if (name == "deterministic") return BoundFamily::Deterministic;
    if (name == "both") return BoundFamily::Both;
    throw std::invalid_argument("unknown bound family '" + name + "'");
}

IncumbentSource parse_incumbent_source(const std::string& name) {
    if (name == "heuristic") return IncumbentSource::Heuristic;
    if (name == "decomposition") return IncumbentSource::Decomposition;
    throw std::invalid_argument("unknown lower-bound source '" + name + "'");
}

LeafSolver::Kind parse_solver_kind(const std::string& name) {
    if (name == "exact") return LeafSolver::Kind::Exact;
    if (name == "anneal") return LeafSolver::Kind::Anneal;
    throw std::invalid_argument("unknown solver '" + name + "'");
}

std::set<Reduction> parse_reductions(const std::string& list) {
    std::set<Reduction> out;
    if (list.empty() || list == "none") return out;
    std::istringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        if (item == "kcore") out.insert(Reduction::KCore);
        else if (item == "edge-kcore") out.insert(Reduction::EdgeKCore);
        else if (item == "persistency") out.insert(Reduction::Persistency);
        else if (item == "nbvr") out.insert(Reduction::Nbvr);
        else if (item == "none")
            throw std::invalid_argument("'none' cannot be combined with other reductions");
        else
            throw std::invalid_argument("unknown reduction '" + item + "'");
    }
    return out;
}

std::string reductions_to_string(const std::set<Reduction>& reductions) {
    if (reductions.empty()) return "none";
    std::string out;
    for (Reduction r : {Reduction::KCore, Reduction::EdgeKCore, Reduction::Persistency,
                        Reduction::Nbvr}) {
        if (!reductions.count(r)) continue;
        if (!out.empty()) out += "+";
        out += to_string(r);
    }
    return out;
}

} // namespace qdeco

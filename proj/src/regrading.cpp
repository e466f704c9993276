#include "greengrade/regrading.hpp"

#include <json.hpp>

#include <deque>
#include <stdexcept>

namespace greengrade {

DegreeFunction degrees_of(const GradedQuiver& q) {
    DegreeFunction d;
    for (const auto& a : q.arrows)
        d[a.id()] = a.degree;
    return d;
}

DegreeFunction apply_shifts(const GradedQuiver& q, const DegreeFunction& d, const ShiftVector& s) {
    if (static_cast<int>(s.n.size()) != q.e + 1)
        throw std::invalid_argument("shift vector size must equal the number of vertices");
    DegreeFunction out;
    for (const auto& a : q.arrows)
        out[a.id()] = d.at(a.id()) + s.n[a.source] - s.n[a.target];
    return out;
}

ShiftVector positive_shifts(const GradedQuiver& q, const A0Algebra& a) {
    ShiftVector s;
    s.n.assign(q.e + 1, 0);
    for (const auto& comp : a.components)
        for (const auto& [v, level] : comp.level)
            s.n[v] = 1 + level;
    return s;
}

DegreeFunction rescale(const DegreeFunction& d, long k) {
    if (k <= 0)
        throw std::invalid_argument("rescale factor must be positive");
    DegreeFunction out;
    for (const auto& [id, deg] : d) {
        if (deg % k != 0)
            throw std::invalid_argument("degree of arrow " + id + " is not divisible by " +
                                        std::to_string(k));
        out[id] = deg / k;
    }
    return out;
}

DegreeFunction scale(const DegreeFunction& d, long k) {
    DegreeFunction out;
    for (const auto& [id, deg] : d)
        out[id] = deg * k;
    return out;
}

std::optional<MoritaSolution> morita_solve(const GradedQuiver& q, const DegreeFunction& d1,
                                           const DegreeFunction& d2, bool allow_rescale) {
    for (const auto& a : q.arrows)
        if (!d1.count(a.id()) || !d2.count(a.id()))
            throw std::invalid_argument("grading does not cover arrow " + a.id());

    // cycle sums are complete shift invariants; their ratio pins the scale
    mpq_class r = 1;
    if (allow_rescale) {
        bool found = false;
        for (size_t c = 0; c < q.cycles.size() && !found; ++c) {
            long s1 = 0, s2 = 0;
            for (int ai : q.cycles[c].arrows) {
                s1 += d1.at(q.arrows[ai].id());
                s2 += d2.at(q.arrows[ai].id());
            }
            if (s1 != 0) {
                r = mpq_class(s2, s1);
                r.canonicalize();
                found = true;
            } else if (s2 != 0) {
                return std::nullopt; // shift-invariant mismatch
            }
        }
    }

    // propagate shifts over the quiver graph; BFS from vertex 1
    std::vector<std::optional<mpq_class>> n(q.e + 1);
    n[1] = 0;
    std::deque<int> queue{1};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (const auto& a : q.arrows) {
            // d2 = r d1 + n_src - n_tgt
            if (a.source == v && a.source != a.target && !n[a.target]) {
                n[a.target] = *n[v] + r * d1.at(a.id()) - d2.at(a.id());
                queue.push_back(a.target);
            } else if (a.target == v && a.source != a.target && !n[a.source]) {
                n[a.source] = *n[v] - r * d1.at(a.id()) + d2.at(a.id());
                queue.push_back(a.source);
            }
        }
    }
    for (int v = 1; v <= q.e; ++v)
        if (!n[v])
            n[v] = 0; // isolated vertex (e = 1 with no arrows)

    MoritaSolution sol;
    sol.scale = r;
    sol.n.assign(q.e + 1, 0);
    for (int v = 1; v <= q.e; ++v) {
        mpq_class nv = *n[v] - *n[1];
        if (nv.get_den() != 1)
            return std::nullopt; // shifts must be integers
        sol.n[v] = static_cast<long>(nv.get_num().get_si());
    }

    // full verification of every arrow, loops included
    for (const auto& a : q.arrows) {
        mpq_class lhs = d2.at(a.id());
        mpq_class rhs = r * d1.at(a.id()) + sol.n[a.source] - sol.n[a.target];
        if (lhs != rhs)
            return std::nullopt;
    }
    return sol;
}

DegreeFunction parse_grading_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw std::invalid_argument(std::string("malformed grading document: ") + ex.what());
    }
    DegreeFunction d;
    for (const auto& [id, deg] : doc.items())
        d[id] = deg.get<long>();
    return d;
}

std::string serialize_grading_json(const DegreeFunction& d) {
    nlohmann::json doc = nlohmann::json::object();
    for (const auto& [id, deg] : d)
        doc[id] = deg;
    return doc.dump(2);
}

} // namespace greengrade

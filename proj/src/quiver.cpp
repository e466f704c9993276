#include "greengrade/quiver.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace greengrade {

const Arrow* GradedQuiver::find_arrow(int source, int target) const {
    for (const auto& a : arrows)
        if (a.source == source && a.target == target)
            return &a;
    return nullptr;
}

std::vector<int> GradedQuiver::cycles_at(int vertex) const {
    std::vector<int> out;
    for (size_t c = 0; c < cycles.size(); ++c)
        if (std::count(cycles[c].rotation.begin(), cycles[c].rotation.end(), vertex))
            out.push_back(static_cast<int>(c));
    return out;
}

bool GradedQuiver::on_exceptional_cycle(int vertex) const {
    if (!exceptional_cycle)
        return false;
    const auto& rot = cycles[*exceptional_cycle].rotation;
    return std::count(rot.begin(), rot.end(), vertex) > 0;
}

std::vector<int> GradedQuiver::cycle_word_from(int c, int vertex) const {
    const Cycle& cyc = cycles[c];
    const int r = static_cast<int>(cyc.rotation.size());
    int pos = -1;
    for (int k = 0; k < r; ++k)
        if (cyc.rotation[k] == vertex)
            pos = k;
    if (pos < 0)
        throw std::logic_error("vertex not on cycle");
    // the arrow leaving `vertex` inside this cycle is arrows[pos-1]:
    // rotation[pos] -> rotation[pos-1]; follow the directed cycle around
    std::vector<int> word;
    for (int k = 0; k < r; ++k) {
        int idx = ((pos - 1 - k) % r + r) % r;
        word.push_back(cyc.arrows[idx]);
    }
    return word;
}

long GradedQuiver::cycle_degree_sum(int c) const {
    long s = 0;
    for (int a : cycles[c].arrows)
        s += arrows[a].degree;
    return s;
}

std::pair<GradedQuiver, RelationSet> build_quiver(const BrauerTree& t, const GreenNumbering& n) {
    GradedQuiver q;
    q.e = n.e();
    q.multiplicity = t.multiplicity;

    auto add_cycle = [&](const std::vector<int>& rotation, bool exceptional) {
        Cycle cyc;
        cyc.rotation = rotation;
        cyc.exceptional = exceptional;
        const int r = static_cast<int>(rotation.size());
        const int cindex = static_cast<int>(q.cycles.size());
        for (int k = 0; k < r; ++k) {
            Arrow a;
            a.source = rotation[(k + 1) % r];
            a.target = rotation[k];
            a.cycle = cindex;
            cyc.arrows.push_back(static_cast<int>(q.arrows.size()));
            q.arrows.push_back(a);
        }
        q.cycles.push_back(std::move(cyc));
        if (exceptional)
            q.exceptional_cycle = cindex;
    };

    for (const auto& [v, rot] : t.rotation) {
        const bool exc = (v == t.exceptional);
        if (rot.size() >= 2) {
            std::vector<int> rotation;
            for (const auto& eid : rot)
                rotation.push_back(n.index_of.at(eid));
            add_cycle(rotation, exc);
        } else if (exc && t.multiplicity > 1) {
            // one edge at the exceptional vertex: a loop in degree e
            add_cycle({n.index_of.at(rot.front())}, true);
        }
    }

    RelationSet rel;
    for (size_t a = 0; a < q.arrows.size(); ++a)
        for (size_t b = 0; b < q.arrows.size(); ++b)
            if (q.arrows[a].target == q.arrows[b].source && q.arrows[a].cycle != q.arrows[b].cycle)
                rel.zeros.push_back({static_cast<int>(a), static_cast<int>(b)});

    for (int v = 1; v <= q.e; ++v) {
        auto cs = q.cycles_at(v);
        if (cs.size() == 2) {
            CycleEquality eq;
            eq.vertex = v;
            eq.cycle_a = cs[0];
            eq.cycle_b = cs[1];
            eq.power_a = q.cycles[cs[0]].exceptional ? t.multiplicity : 1;
            eq.power_b = q.cycles[cs[1]].exceptional ? t.multiplicity : 1;
            rel.equalities.push_back(eq);
        }
    }
    if (q.e == 1 && t.multiplicity > 1)
        rel.loop_truncation = t.multiplicity + 1;
    return {std::move(q), std::move(rel)};
}

GradedQuiver assign_degrees(GradedQuiver q, const GreenNumbering& n, int multiplicity) {
    const int e = q.e;
    for (auto& cyc : q.cycles) {
        if (cyc.exceptional) {
            for (int ai : cyc.arrows) {
                Arrow& a = q.arrows[ai];
                a.degree = ((a.source - a.target - 1) % e + e) % e + 1;
            }
        } else {
            const int lo = *std::min_element(cyc.rotation.begin(), cyc.rotation.end());
            const int hi = *std::max_element(cyc.rotation.begin(), cyc.rotation.end());
            for (int ai : cyc.arrows) {
                Arrow& a = q.arrows[ai];
                a.degree = (a.source == lo && a.target == hi) ? multiplicity * e : 0;
            }
        }
    }
    (void)n;
    return q;
}

bool DegreeCheckReport::all_ok() const {
    for (const auto& en : entries)
        if (!en.ok)
            return false;
    return true;
}

DegreeCheckReport exceptional_degree_check(const GradedQuiver& q, const std::vector<Component>& comps) {
    DegreeCheckReport rep;
    if (!q.exceptional_cycle)
        return rep;
    for (int ai : q.cycles[*q.exceptional_cycle].arrows) {
        const Arrow& a = q.arrows[ai];
        DegreeCheckEntry en;
        en.arrow = ai;
        en.degree = a.degree;
        for (const auto& c : comps)
            if (c.root == a.target)
                en.component_size = c.size();
        en.ok = (en.degree == en.component_size);
        rep.entries.push_back(en);
    }
    return rep;
}

namespace {

std::set<std::tuple<int, int, int>> arrow_set(const GradedQuiver& q) {
    std::set<std::tuple<int, int, int>> s;
    for (const auto& a : q.arrows)
        s.insert({a.source, a.target, a.degree});
    return s;
}

// cycles as canonical data: sorted member set + exceptional flag
std::set<std::pair<std::vector<int>, bool>> cycle_set(const GradedQuiver& q) {
    std::set<std::pair<std::vector<int>, bool>> s;
    for (const auto& c : q.cycles) {
        std::vector<int> rot = c.rotation;
        std::sort(rot.begin(), rot.end());
        s.insert({rot, c.exceptional});
    }
    return s;
}

} // namespace

bool quiver_equal(const GradedQuiver& a, const GradedQuiver& b) {
    if (a.e != b.e || a.multiplicity != b.multiplicity)
        return false;
    if (arrow_set(a) != arrow_set(b))
        return false;
    if (cycle_set(a) != cycle_set(b))
        return false;
    // rotation orders must agree cyclically, not only as sets
    for (const auto& ca : a.cycles) {
        bool matched = false;
        for (const auto& cb : b.cycles) {
            if (ca.rotation.size() != cb.rotation.size() || ca.exceptional != cb.exceptional)
                continue;
            const int r = static_cast<int>(ca.rotation.size());
            for (int shift = 0; shift < r && !matched; ++shift) {
                bool eq = true;
                for (int k = 0; k < r; ++k)
                    if (ca.rotation[k] != cb.rotation[(k + shift) % r]) {
                        eq = false;
                        break;
                    }
                matched = eq;
            }
            if (matched)
                break;
        }
        if (!matched)
            return false;
    }
    return true;
}

bool relations_equal(const GradedQuiver& qa, const RelationSet& a,
                     const GradedQuiver& qb, const RelationSet& b) {
    auto zero_pairs = [](const GradedQuiver& q, const RelationSet& r) {
        std::set<std::tuple<int, int, int, int>> s;
        for (const auto& z : r.zeros)
            s.insert({q.arrows[z.first].source, q.arrows[z.first].target,
                      q.arrows[z.second].source, q.arrows[z.second].target});
        return s;
    };
    auto equality_data = [](const GradedQuiver& q, const RelationSet& r) {
        std::set<std::tuple<int, std::vector<int>, int, std::vector<int>, int>> s;
        for (const auto& eq : r.equalities) {
            auto key = [&](int cyc, int power) {
                std::vector<int> rot = q.cycles[cyc].rotation;
                std::sort(rot.begin(), rot.end());
                return std::make_pair(rot, power);
            };
            auto ka = key(eq.cycle_a, eq.power_a);
            auto kb = key(eq.cycle_b, eq.power_b);
            if (kb < ka)
                std::swap(ka, kb);
            s.insert({eq.vertex, ka.first, ka.second, kb.first, kb.second});
        }
        return s;
    };
    return zero_pairs(qa, a) == zero_pairs(qb, b) &&
           equality_data(qa, a) == equality_data(qb, b) &&
           a.loop_truncation == b.loop_truncation;
}

std::string render_dot(const GradedQuiver& q, const GreenNumbering& n) {
    std::ostringstream os;
    os << "digraph quiver {\n";
    for (int v = 1; v <= q.e; ++v)
        os << "  v" << v << " [label=\"" << n.id_of[v] << " (" << v << ")\"];\n";
    std::vector<Arrow> sorted = q.arrows;
    std::stable_sort(sorted.begin(), sorted.end(), [](const Arrow& x, const Arrow& y) {
        return std::tie(x.source, x.target) < std::tie(y.source, y.target);
    });
    for (const auto& a : sorted) {
        const bool exc = q.exceptional_cycle && q.cycles[a.cycle].exceptional;
        os << "  v" << a.source << " -> v" << a.target << " [label=\"" << a.degree << "\"";
        if (exc)
            os << ", penwidth=2";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

std::string render_json(const GradedQuiver& q, const GreenNumbering& n) {
    std::ostringstream os;
    os << "{\n  \"edges\": {";
    for (int v = 1; v <= q.e; ++v)
        os << (v > 1 ? ", " : "") << "\"" << n.id_of[v] << "\": " << v;
    os << "},\n  \"arrows\": [\n";
    std::vector<Arrow> sorted = q.arrows;
    std::stable_sort(sorted.begin(), sorted.end(), [](const Arrow& x, const Arrow& y) {
        return std::tie(x.source, x.target) < std::tie(y.source, y.target);
    });
    for (size_t k = 0; k < sorted.size(); ++k) {
        const auto& a = sorted[k];
        os << "    {\"id\": \"" << a.id() << "\", \"source\": " << a.source
           << ", \"target\": " << a.target << ", \"degree\": " << a.degree << ", \"exceptional\": "
           << (q.cycles[a.cycle].exceptional ? "true" : "false") << "}"
           << (k + 1 < sorted.size() ? "," : "") << "\n";
    }
    os << "  ]\n}\n";
    return os.str();
}

std::string render_latex(const GradedQuiver& q, const GreenNumbering& n) {
    std::ostringstream os;
    os << "\\begin{array}{lll}\n";
    std::vector<Arrow> sorted = q.arrows;
    std::stable_sort(sorted.begin(), sorted.end(), [](const Arrow& x, const Arrow& y) {
        return std::tie(x.source, x.target) < std::tie(y.source, y.target);
    });
    for (const auto& a : sorted)
        os << "S_{" << a.source << "} & \\xrightarrow{\\;" << a.degree << "\\;} & S_{" << a.target
           << "}\\\\\n";
    os << "\\end{array}\n";
    (void)n;
    return os.str();
}

std::string render_text(const GradedQuiver& q, const GreenNumbering& n) {
    std::ostringstream os;
    std::vector<Arrow> sorted = q.arrows;
    std::stable_sort(sorted.begin(), sorted.end(), [](const Arrow& x, const Arrow& y) {
        return std::tie(x.source, x.target) < std::tie(y.source, y.target);
    });
    for (const auto& a : sorted) {
        os << a.id() << "\t" << a.degree << "\t" << n.id_of[a.source] << "->" << n.id_of[a.target];
        if (q.cycles[a.cycle].exceptional)
            os << "\texceptional";
        os << "\n";
    }
    return os.str();
}

} // namespace greengrade

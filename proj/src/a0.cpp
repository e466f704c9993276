#include "greengrade/a0.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace greengrade {

int A0Component::max_level() const {
    int lv = 0;
    for (const auto& [v, l] : level)
        lv = std::max(lv, l);
    return lv;
}

A0Algebra extract_a0(const GradedQuiver& q, const RelationSet& r) {
    A0Algebra a;
    a.e = q.e;
    a.multiplicity = q.multiplicity;

    // degree-0 arrows form a forest; each non-root vertex has one out-arrow
    // toward its parent (the smaller index on its path to a root)
    std::map<int, int> parent_arrow; // vertex -> quiver arrow index of its out-arrow
    for (size_t ai = 0; ai < q.arrows.size(); ++ai)
        if (q.arrows[ai].degree == 0) {
            if (parent_arrow.count(q.arrows[ai].source))
                throw std::logic_error("vertex with two degree-0 out-arrows");
            parent_arrow[q.arrows[ai].source] = static_cast<int>(ai);
        }

    auto root_and_level = [&](int v) {
        int level = 0;
        while (parent_arrow.count(v)) {
            v = q.arrows[parent_arrow.at(v)].target;
            ++level;
        }
        return std::make_pair(v, level);
    };

    // roots in ccw order of the exceptional cycle = increasing Green index
    std::map<int, A0Component> by_root;
    for (int v = 1; v <= q.e; ++v) {
        auto [root, level] = root_and_level(v);
        A0Component& c = by_root[root];
        c.root = root;
        c.level[v] = level;
    }
    for (auto& [root, c] : by_root) {
        for (const auto& [v, lv] : c.level)
            c.vertices.push_back(v);
        std::sort(c.vertices.begin(), c.vertices.end(), [&](int x, int y) {
            return std::make_pair(c.level.at(x), x) < std::make_pair(c.level.at(y), y);
        });
        for (int v : c.vertices)
            if (parent_arrow.count(v)) {
                const Arrow& qa = q.arrows[parent_arrow.at(v)];
                c.arrows.push_back(A0Arrow{qa.source, qa.target, parent_arrow.at(v)});
            }
        for (const auto& z : r.zeros) {
            const Arrow& first = q.arrows[z.first];
            const Arrow& second = q.arrows[z.second];
            if (first.degree == 0 && second.degree == 0 && c.level.count(first.source))
                c.relations.push_back({A0Arrow{first.source, first.target, z.first},
                                       A0Arrow{second.source, second.target, z.second}});
        }
        a.components.push_back(std::move(c));
    }
    return a;
}

namespace {

struct Recovery {
    const A0Component& comp;
    std::set<std::pair<int, int>> zero_pairs; // (first src, second src) keyed by arrow identity
    std::set<std::pair<int, int>> used;       // arrows already in recovered cycles
    std::vector<std::vector<int>> cycles_found; // directed vertex cycles

    std::vector<A0Arrow> arrows_into(int v) const {
        std::vector<A0Arrow> in;
        for (const auto& ar : comp.arrows)
            if (ar.target == v && !used.count({ar.source, ar.target}))
                in.push_back(ar);
        return in;
    }

    bool is_zero_pair(const A0Arrow& x, const A0Arrow& y) const {
        return zero_pairs.count({x.source, y.source}) > 0;
    }

    // longest nonzero path of unused arrows ending at v; unique by construction,
    // asserted rather than assumed
    std::vector<A0Arrow> longest_path_into(int v) const {
        std::vector<std::vector<A0Arrow>> best;
        for (const auto& ar : arrows_into(v)) {
            std::vector<std::vector<A0Arrow>> stack{{ar}};
            while (!stack.empty()) {
                auto path = stack.back();
                stack.pop_back();
                bool extended = false;
                for (const auto& prev : arrows_into(path.front().source)) {
                    if (is_zero_pair(prev, path.front()))
                        continue;
                    auto longer = path;
                    longer.insert(longer.begin(), prev);
                    stack.push_back(std::move(longer));
                    extended = true;
                }
                if (!extended) {
                    if (best.empty() || path.size() > best.front().size())
                        best = {path};
                    else if (path.size() == best.front().size())
                        best.push_back(path);
                }
            }
        }
        if (best.empty())
            return {};
        if (best.size() > 1)
            throw std::logic_error("longest nonzero path into vertex is not unique");
        return best.front();
    }
};

} // namespace

std::pair<GradedQuiver, RelationSet> recover_quiver(const A0Algebra& a) {
    GradedQuiver q;
    q.e = a.e;
    q.multiplicity = a.multiplicity;

    std::vector<Cycle> raw_cycles;

    for (const auto& comp : a.components) {
        Recovery rec{comp, {}, {}, {}};
        for (const auto& [x, y] : comp.relations)
            rec.zero_pairs.insert({x.source, y.source});

        for (int v : comp.vertices) { // level order: root first
            auto path = rec.longest_path_into(v);
            if (path.empty())
                continue; // no unrecovered cycle closes at v
            // close the cycle: add arrow v -> source of the longest path
            std::vector<std::pair<int, int>> cyc_arrows;
            for (const auto& ar : path) {
                cyc_arrows.push_back({ar.source, ar.target});
                rec.used.insert({ar.source, ar.target});
            }
            cyc_arrows.push_back({v, path.front().source});
            // rotation order: the directed cycle runs against the rotation
            std::vector<int> rotation;
            for (auto it = cyc_arrows.rbegin(); it != cyc_arrows.rend(); ++it)
                rotation.push_back(it->second);
            Cycle c;
            c.rotation = rotation;
            c.exceptional = false;
            raw_cycles.push_back(std::move(c));
        }
    }

    // the exceptional cycle comes from the cyclic order of the components
    if (a.components.size() >= 2) {
        std::vector<int> roots;
        for (const auto& comp : a.components)
            roots.push_back(comp.root);
        Cycle c;
        c.rotation = roots;
        c.exceptional = true;
        raw_cycles.push_back(std::move(c));
    } else if (a.components.size() == 1 && a.multiplicity > 1) {
        Cycle c;
        c.rotation = {a.components.front().root};
        c.exceptional = true;
        raw_cycles.push_back(std::move(c));
    }

    for (auto& cyc : raw_cycles) {
        const int cindex = static_cast<int>(q.cycles.size());
        Cycle stored;
        stored.rotation = cyc.rotation;
        stored.exceptional = cyc.exceptional;
        const int r = static_cast<int>(stored.rotation.size());
        for (int k = 0; k < r; ++k) {
            Arrow arr;
            arr.source = stored.rotation[(k + 1) % r];
            arr.target = stored.rotation[k];
            arr.cycle = cindex;
            stored.arrows.push_back(static_cast<int>(q.arrows.size()));
            q.arrows.push_back(arr);
        }
        if (stored.exceptional)
            q.exceptional_cycle = cindex;
        q.cycles.push_back(std::move(stored));
    }

    // degrees: inherited arrows 0, each closing/new arrow m*e, exceptional
    // arrows get the component sizes (the grading the walk produces)
    std::map<int, int> comp_size_of_root;
    std::set<std::pair<int, int>> inherited;
    for (const auto& comp : a.components) {
        comp_size_of_root[comp.root] = static_cast<int>(comp.vertices.size());
        for (const auto& ar : comp.arrows)
            inherited.insert({ar.source, ar.target});
    }
    for (auto& arr : q.arrows) {
        if (q.cycles[arr.cycle].exceptional) {
            if (q.cycles[arr.cycle].rotation.size() == 1)
                arr.degree = a.e; // loop
            else
                arr.degree = comp_size_of_root.at(arr.target);
        } else {
            arr.degree = inherited.count({arr.source, arr.target}) ? 0 : a.multiplicity * a.e;
        }
    }

    // regenerate the relation set exactly as build_quiver does
    RelationSet rel;
    for (size_t x = 0; x < q.arrows.size(); ++x)
        for (size_t y = 0; y < q.arrows.size(); ++y)
            if (q.arrows[x].target == q.arrows[y].source && q.arrows[x].cycle != q.arrows[y].cycle)
                rel.zeros.push_back({static_cast<int>(x), static_cast<int>(y)});
    for (int v = 1; v <= q.e; ++v) {
        auto cs = q.cycles_at(v);
        if (cs.size() == 2) {
            CycleEquality eq;
            eq.vertex = v;
            eq.cycle_a = cs[0];
            eq.cycle_b = cs[1];
            eq.power_a = q.cycles[cs[0]].exceptional ? a.multiplicity : 1;
            eq.power_b = q.cycles[cs[1]].exceptional ? a.multiplicity : 1;
            rel.equalities.push_back(eq);
        }
    }
    if (q.e == 1 && a.multiplicity > 1)
        rel.loop_truncation = a.multiplicity + 1;
    return {std::move(q), std::move(rel)};
}

ExactMatrix<mpz_class> a0_cartan(const A0Algebra& a) {
    ExactMatrix<mpz_class> C(a.e, a.e, 0);
    for (const auto& comp : a.components) {
        std::set<std::pair<int, int>> zero_pairs;
        for (const auto& [x, y] : comp.relations)
            zero_pairs.insert({x.source, y.source});
        // count nonzero paths i -> j by walking forward from every vertex
        for (int start : comp.vertices) {
            C.at(start - 1, start - 1) += 1; // empty path
            // each vertex has at most one out-arrow; follow it while nonzero
            const A0Arrow* prev = nullptr;
            int at = start;
            while (true) {
                const A0Arrow* next = nullptr;
                for (const auto& ar : comp.arrows)
                    if (ar.source == at)
                        next = &ar;
                if (!next)
                    break;
                if (prev && zero_pairs.count({prev->source, next->source}))
                    break;
                C.at(start - 1, next->target - 1) += 1;
                prev = next;
                at = next->target;
            }
        }
    }
    return C;
}

int a0_global_dimension(const A0Algebra& a) {
    int gldim = 0;
    for (const auto& comp : a.components) {
        std::set<std::pair<int, int>> zero_pairs;
        for (const auto& [x, y] : comp.relations)
            zero_pairs.insert({x.source, y.source});

        // pd of the cyclic module P_{src(ar)} / <arrows b with (b, ar) a relation>
        std::map<std::pair<int, int>, int> memo;
        std::function<int(const A0Arrow&)> pd_w = [&](const A0Arrow& ar) -> int {
            auto key = std::make_pair(ar.source, ar.target);
            auto it = memo.find(key);
            if (it != memo.end())
                return it->second;
            int best = -1;
            for (const auto& b : comp.arrows)
                if (b.target == ar.source && zero_pairs.count({b.source, ar.source}))
                    best = std::max(best, pd_w(b));
            int result = (best < 0) ? 0 : 1 + best;
            memo[key] = result;
            return result;
        };

        for (int v : comp.vertices) {
            int best = -1;
            for (const auto& ar : comp.arrows)
                if (ar.target == v)
                    best = std::max(best, pd_w(ar));
            const int pd_simple = (best < 0) ? 0 : 1 + best;
            gldim = std::max(gldim, pd_simple);
        }
    }
    return gldim;
}

std::vector<std::pair<int, int>> qh_order(const A0Algebra& a) {
    std::vector<std::pair<int, int>> rel;
    for (const auto& comp : a.components) {
        // reachability along arrows (ignoring relations: order uses paths in the quiver)
        for (int v : comp.vertices) {
            int at = v;
            while (true) {
                const A0Arrow* next = nullptr;
                for (const auto& ar : comp.arrows)
                    if (ar.source == at)
                        next = &ar;
                if (!next)
                    break;
                rel.push_back({v, next->target}); // path v -> target means S_v < S_target
                at = next->target;
            }
        }
    }
    return rel;
}

std::vector<int> level_order(const A0Algebra& a) {
    std::vector<int> order;
    for (const auto& comp : a.components)
        for (int v : comp.vertices)
            order.push_back(v);
    return order;
}

} // namespace greengrade

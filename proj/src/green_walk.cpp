#include "greengrade/green_walk.hpp"

#include <algorithm>
#include <stdexcept>

namespace greengrade {

namespace {

struct Walker {
    const BrauerTree& t;
    const EdgeDistance& dist;
    GreenNumbering& out;
    int next_index = 1;

    void number(const std::string& eid) {
        out.index_of[eid] = next_index;
        out.id_of.push_back(eid);
        out.delta.push_back(dist.delta.at(eid));
        auto p = dist.predecessor.find(eid);
        out.predecessor.push_back(p == dist.predecessor.end() ? 0 : out.index_of.at(p->second));
        ++next_index;
    }

    // enter vertex v via arrival edge; visit remaining edges ccw after it
    void descend(const std::string& v, const std::string& arrival) {
        const auto& rot = t.rotation.at(v);
        const int r = static_cast<int>(rot.size());
        int pos = static_cast<int>(std::find(rot.begin(), rot.end(), arrival) - rot.begin());
        for (int k = 1; k < r; ++k) {
            const std::string& eid = rot[(pos + k) % r];
            if (out.index_of.count(eid))
                continue;
            number(eid);
            descend(t.other_end(eid, v), eid);
        }
    }
};

} // namespace

GreenNumbering green_number(const BrauerTree& t, const std::optional<std::string>& start) {
    const EdgeDistance dist = distances(t);
    const auto& root_rot = t.rotation.at(t.exceptional);

    std::string start_edge;
    if (start) {
        if (std::find(root_rot.begin(), root_rot.end(), *start) == root_rot.end())
            throw std::invalid_argument("start edge " + *start +
                                        " is not adjacent to the exceptional vertex");
        start_edge = *start;
    } else {
        start_edge = *std::min_element(root_rot.begin(), root_rot.end());
    }

    GreenNumbering n;
    n.start_edge = start_edge;
    n.id_of.push_back(""); // 1-based
    n.delta.push_back(0);
    n.predecessor.push_back(0);

    Walker w{t, dist, n};
    const int r = static_cast<int>(root_rot.size());
    int pos = static_cast<int>(std::find(root_rot.begin(), root_rot.end(), start_edge) - root_rot.begin());
    for (int k = 0; k < r; ++k) {
        const std::string& eid = root_rot[(pos + k) % r];
        if (n.index_of.count(eid))
            continue;
        w.number(eid);
        w.descend(t.other_end(eid, t.exceptional), eid);
    }
    if (n.e() != t.e())
        throw std::logic_error("green walk failed to number every edge");
    return n;
}

std::vector<Component> components(const GreenNumbering& n) {
    const int e = n.e();
    std::vector<int> root_of(e + 1, 0);
    std::vector<Component> comps;
    std::map<int, int> comp_of_root;
    for (int i = 1; i <= e; ++i) {
        int r = i;
        while (n.delta[r] >= 2)
            r = n.predecessor[r];
        root_of[i] = r;
        if (!comp_of_root.count(r)) {
            comp_of_root[r] = static_cast<int>(comps.size());
            comps.push_back(Component{r, {}});
        }
    }
    for (int i = 1; i <= e; ++i)
        comps[comp_of_root.at(root_of[i])].members.push_back(i);
    // roots appear in walk order, which is the ccw order at the exceptional vertex
    std::sort(comps.begin(), comps.end(),
              [](const Component& a, const Component& b) { return a.root < b.root; });
    return comps;
}

} // namespace greengrade

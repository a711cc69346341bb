#include "symdyn/dynsys.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

#include "symdyn/error.hpp"

namespace symdyn {

std::vector<StateId> FiniteDynSys::states() const {
    std::vector<StateId> out;
    out.reserve(step.size());
    for (const auto& [s, _] : step) out.push_back(s);
    return out;
}

const StateId& FiniteDynSys::step_of(const StateId& s) const {
    auto it = step.find(s);
    if (it == step.end())
        throw Error(ErrorCode::StateNotFound, "state '" + s + "' not in system");
    return it->second;
}

FiniteDynSys make_system(std::map<StateId, StateId> step) {
    for (const auto& [s, t] : step) {
        if (!step.count(t))
            throw Error(ErrorCode::StateNotFound,
                        "step image '" + t + "' of state '" + s + "' is not a state");
    }
    return FiniteDynSys{std::move(step)};
}

StateId iterate(const FiniteDynSys& sys, const StateId& s, std::size_t n) {
    StateId cur = s;
    if (!sys.contains(cur))
        throw Error(ErrorCode::StateNotFound, "state '" + s + "' not in system");
    for (std::size_t i = 0; i < n; ++i) cur = sys.step.at(cur);
    return cur;
}

bool check_semiconjugacy(const DynMorphism& m) {
    for (const auto& [s, next] : m.source.step) {
        auto it = m.map.find(s);
        if (it == m.map.end())
            throw Error(ErrorCode::MapNotTotal, "no image for state '" + s + "'");
        if (!m.target.contains(it->second)) return false;
        auto jt = m.map.find(next);
        if (jt == m.map.end())
            throw Error(ErrorCode::MapNotTotal, "no image for state '" + next + "'");
        if (m.target.step.at(it->second) != jt->second) return false;
    }
    return true;
}

DynMorphism compose_morphisms(const DynMorphism& g, const DynMorphism& f) {
    DynMorphism out{f.source, g.target, {}};
    for (const auto& [s, mid] : f.map) {
        auto it = g.map.find(mid);
        if (it == g.map.end())
            throw Error(ErrorCode::MapNotTotal,
                        "intermediate state '" + mid + "' has no image");
        out.map[s] = it->second;
    }
    return out;
}

FiniteDynSys subsample(const FiniteDynSys& sys, std::size_t dt) {
    if (dt == 0) throw Error(ErrorCode::InvalidStride, "stride must be positive");
    FiniteDynSys out;
    for (const auto& [s, _] : sys.step) out.step[s] = iterate(sys, s, dt);
    return out;
}

RestrictionResult reachable_restriction(const FiniteDynSys& sys,
                                        const std::set<StateId>& seeds) {
    std::set<StateId> closed;
    std::deque<StateId> frontier;
    for (const auto& s : seeds) {
        if (!sys.contains(s))
            throw Error(ErrorCode::StateNotFound, "seed '" + s + "' not in system");
        if (closed.insert(s).second) frontier.push_back(s);
    }
    while (!frontier.empty()) {
        StateId s = frontier.front();
        frontier.pop_front();
        const StateId& t = sys.step.at(s);
        if (closed.insert(t).second) frontier.push_back(t);
    }
    RestrictionResult res;
    for (const auto& s : closed) res.system.step[s] = sys.step.at(s);
    res.inclusion.source = res.system;
    res.inclusion.target = sys;
    for (const auto& s : closed) res.inclusion.map[s] = s;
    return res;
}

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;

    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

} // namespace

ColimitResult colimit(const DynDiagram& d) {
    // Index the disjoint union of node state sets.
    std::vector<std::pair<std::size_t, StateId>> elems;
    std::map<std::pair<std::size_t, StateId>, std::size_t> index;
    for (std::size_t i = 0; i < d.nodes.size(); ++i) {
        for (const auto& [s, _] : d.nodes[i].step) {
            index[{i, s}] = elems.size();
            elems.emplace_back(i, s);
        }
    }

    for (const auto& a : d.arrows) {
        if (a.from >= d.nodes.size() || a.to >= d.nodes.size())
            throw Error(ErrorCode::InvalidDiagram, "arrow endpoint out of range");
        DynMorphism m{d.nodes[a.from], d.nodes[a.to], a.map};
        bool ok;
        try {
            ok = check_semiconjugacy(m);
        } catch (const Error&) {
            ok = false;
        }
        if (!ok)
            throw Error(ErrorCode::InvalidDiagram, "arrow is not a semiconjugacy");
    }

    UnionFind uf(elems.size());
    for (const auto& a : d.arrows)
        for (const auto& [x, y] : a.map) uf.unite(index.at({a.from, x}), index.at({a.to, y}));

    // Canonical class names: sorted member pairs rendered "i.id", joined by '+'.
    std::map<std::size_t, std::set<std::pair<std::size_t, StateId>>> classes;
    for (std::size_t k = 0; k < elems.size(); ++k) classes[uf.find(k)].insert(elems[k]);

    std::map<std::size_t, StateId> class_name;
    for (const auto& [root, members] : classes) {
        std::string name;
        for (const auto& [i, s] : members) {
            if (!name.empty()) name += '+';
            name += std::to_string(i) + "." + s;
        }
        class_name[root] = name;
    }

    // Induced step: step([i,x]) = [i, step_i(x)]; must agree over the class.
    ColimitResult res;
    for (const auto& [root, members] : classes) {
        std::optional<StateId> image;
        for (const auto& [i, s] : members) {
            StateId img = class_name.at(uf.find(index.at({i, d.nodes[i].step.at(s)})));
            if (!image)
                image = img;
            else if (*image != img)
                throw Error(ErrorCode::InvalidDiagram,
                            "induced step ill-defined on class " + class_name.at(root));
        }
        res.system.step[class_name.at(root)] = *image;
    }

    res.legs.reserve(d.nodes.size());
    for (std::size_t i = 0; i < d.nodes.size(); ++i) {
        DynMorphism leg{d.nodes[i], res.system, {}};
        for (const auto& [s, _] : d.nodes[i].step)
            leg.map[s] = class_name.at(uf.find(index.at({i, s})));
        res.legs.push_back(std::move(leg));
    }
    return res;
}

namespace {

// Invariants of a state in a functional graph, used to prune the conjugacy
// search: (in-degree, distance to the eventual cycle, length of that cycle).
struct StateSig {
    std::size_t indeg = 0;
    std::size_t tail = 0;
    std::size_t cycle = 0;

    auto operator<=>(const StateSig&) const = default;
};

std::map<StateId, StateSig> signatures(const FiniteDynSys& sys) {
    std::map<StateId, StateSig> sig;
    for (const auto& [s, _] : sys.step) sig[s] = {};
    for (const auto& [_, t] : sys.step) sig[t].indeg++;

    for (const auto& [s, _] : sys.step) {
        // Floyd-free rho walk: record the path until a repeat.
        std::vector<StateId> path;
        std::map<StateId, std::size_t> seen;
        StateId cur = s;
        while (!seen.count(cur)) {
            seen[cur] = path.size();
            path.push_back(cur);
            cur = sys.step.at(cur);
        }
        std::size_t enter = seen[cur];
        sig[s].tail = enter;
        sig[s].cycle = path.size() - enter;
    }
    return sig;
}

bool full_square_holds(const FiniteDynSys& a, const FiniteDynSys& b,
                       const std::map<StateId, StateId>& h) {
    for (const auto& [s, sn] : a.step)
        if (b.step.at(h.at(s)) != h.at(sn)) return false;
    return true;
}

bool search_bijection(const std::vector<StateId>& order, std::size_t pos,
                      const FiniteDynSys& a, const FiniteDynSys& b,
                      const std::map<StateId, StateSig>& sig_a,
                      const std::map<StateId, StateSig>& sig_b,
                      std::map<StateId, StateId>& h, std::set<StateId>& used) {
    if (pos == order.size()) return full_square_holds(a, b, h);
    const StateId& s = order[pos];
    if (auto it = h.find(s); it != h.end()) {
        // Already forced by an earlier assignment; validate what is visible.
        auto jt = h.find(a.step.at(s));
        if (jt != h.end() && b.step.at(it->second) != jt->second) return false;
        return search_bijection(order, pos + 1, a, b, sig_a, sig_b, h, used);
    }
    for (const auto& [t, _] : b.step) {
        if (used.count(t) || sig_a.at(s) != sig_b.at(t)) continue;
        h[s] = t;
        used.insert(t);
        // Propagate consistency one step forward.
        bool ok = true;
        const StateId& sn = a.step.at(s);
        const StateId& tn = b.step.at(t);
        bool forced = false;
        if (auto it = h.find(sn); it != h.end()) {
            ok = (it->second == tn);
        } else if (used.count(tn) || sig_a.at(sn) != sig_b.at(tn)) {
            ok = false;
        } else {
            h[sn] = tn;
            used.insert(tn);
            forced = true;
        }
        if (ok && search_bijection(order, pos + 1, a, b, sig_a, sig_b, h, used))
            return true;
        if (forced) {
            h.erase(sn);
            used.erase(tn);
        }
        h.erase(s);
        used.erase(t);
    }
    return false;
}

} // namespace

std::optional<std::map<StateId, StateId>> find_conjugacy(const FiniteDynSys& a,
                                                         const FiniteDynSys& b) {
    if (a.size() != b.size()) return std::nullopt;
    if (a.empty()) return std::map<StateId, StateId>{};

    auto sig_a = signatures(a);
    auto sig_b = signatures(b);

    // Quick reject: multiset of signatures must match.
    std::multiset<StateSig> ma, mb;
    for (const auto& [_, v] : sig_a) ma.insert(v);
    for (const auto& [_, v] : sig_b) mb.insert(v);
    if (ma != mb) return std::nullopt;

    std::vector<StateId> order = a.states();
    std::map<StateId, StateId> h;
    std::set<StateId> used;
    if (search_bijection(order, 0, a, b, sig_a, sig_b, h, used)) return h;
    return std::nullopt;
}

} // namespace symdyn

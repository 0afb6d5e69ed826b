#include "friezelink/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace friezelink {

namespace {

constexpr int kNW = 0, kNE = 1, kSW = 2, kSE = 3;

int partner_slot(int s) {
    switch (s) {
        case kNW: return kSE;
        case kSE: return kNW;
        case kNE: return kSW;
        case kSW: return kNE;
    }
    throw error("bad slot");
}

// Local slot coordinates, for direction vectors and the CCW slot order.
constexpr int kSlotX[4] = {-1, 1, -1, 1};
constexpr int kSlotY[4] = {1, 1, -1, -1};

struct Pass { // one strand running through one crossing
    int crossing = -1;
    int entry_slot = -1; // in traced direction
    int exit_slot = -1;
    int component = -1;
};

struct Item { // traversal step: an arc segment or a run through a crossing
    bool is_pass = false;
    int id = -1; // edge id or pass id
};

struct Trace {
    int components = 0;
    std::vector<Pass> passes;                    // two per crossing
    std::vector<std::array<int, 2>> by_crossing; // pass indices, main diag first
    std::vector<int> edge_component;             // per edge
    std::vector<int> edge_forward;               // 1 if traced u->v for edge (u,v)
    std::vector<std::vector<Item>> component_items; // traversal order
};

struct NodeInfo {
    int crossing = -1;
    int slot = -1;
    std::vector<int> edge_ids;
};

std::vector<NodeInfo> node_table(const PlanarDiagram& d) {
    std::vector<NodeInfo> nodes(static_cast<size_t>(d.node_count));
    for (size_t c = 0; c < d.crossings.size(); ++c)
        for (int s = 0; s < 4; ++s) {
            nodes[static_cast<size_t>(d.crossings[c].port[s])].crossing = static_cast<int>(c);
            nodes[static_cast<size_t>(d.crossings[c].port[s])].slot = s;
        }
    for (size_t e = 0; e < d.edges.size(); ++e) {
        nodes[static_cast<size_t>(d.edges[e].first)].edge_ids.push_back(static_cast<int>(e));
        nodes[static_cast<size_t>(d.edges[e].second)].edge_ids.push_back(static_cast<int>(e));
    }
    return nodes;
}

Trace trace_diagram(const PlanarDiagram& d) {
    auto nodes = node_table(d);
    Trace tr;
    tr.by_crossing.assign(d.crossings.size(), {-1, -1});
    tr.edge_component.assign(d.edges.size(), -1);
    tr.edge_forward.assign(d.edges.size(), 0);
    std::vector<char> edge_seen(d.edges.size(), 0);

    for (size_t e0 = 0; e0 < d.edges.size(); ++e0) {
        if (edge_seen[e0]) continue;
        int comp = tr.components++;
        tr.component_items.emplace_back();
        int edge = static_cast<int>(e0);
        int at = d.edges[e0].first; // walk from .first toward .second
        for (;;) {
            edge_seen[static_cast<size_t>(edge)] = 1;
            tr.edge_component[static_cast<size_t>(edge)] = comp;
            int from = at;
            int to = (d.edges[static_cast<size_t>(edge)].first == from)
                         ? d.edges[static_cast<size_t>(edge)].second
                         : d.edges[static_cast<size_t>(edge)].first;
            tr.edge_forward[static_cast<size_t>(edge)] =
                (d.edges[static_cast<size_t>(edge)].first == from) ? 1 : 0;
            tr.component_items[static_cast<size_t>(comp)].push_back(Item{false, edge});

            const NodeInfo& ni = nodes[static_cast<size_t>(to)];
            int next_node, next_edge;
            if (ni.crossing >= 0) {
                // go through the crossing to the partner slot, then out its edge
                Pass p;
                p.crossing = ni.crossing;
                p.entry_slot = ni.slot;
                p.exit_slot = partner_slot(ni.slot);
                p.component = comp;
                int pidx = static_cast<int>(tr.passes.size());
                tr.passes.push_back(p);
                tr.component_items[static_cast<size_t>(comp)].push_back(Item{true, pidx});
                bool main_diag = (p.entry_slot == kNW || p.entry_slot == kSE);
                tr.by_crossing[static_cast<size_t>(p.crossing)][main_diag ? 0 : 1] = pidx;
                next_node = d.crossings[static_cast<size_t>(p.crossing)].port[static_cast<size_t>(p.exit_slot)];
                const NodeInfo& out = nodes[static_cast<size_t>(next_node)];
                if (out.edge_ids.size() != 1) throw error("port node must carry one arc");
                next_edge = out.edge_ids[0];
            } else {
                // plain node: continue along the other incident arc
                if (ni.edge_ids.size() != 2) throw error("plain node must carry two arcs");
                next_node = to;
                next_edge = (ni.edge_ids[0] == edge) ? ni.edge_ids[1] : ni.edge_ids[0];
            }
            if (next_edge == static_cast<int>(e0)) break;
            edge = next_edge;
            at = next_node;
        }
    }
    return tr;
}

} // namespace

PlanarDiagram build_diagram_cf(const ContinuedFraction& cf) {
    Fraction val = cf_value(cf);
    if (cf.a0 != 0 || cf.terms.empty() || !in_open_unit_interval(val))
        throw out_of_range("diagram needs a cf of a fraction in (0,1)");
    PlanarDiagram d;
    d.cf = cf;
    auto new_node = [&d]() { return d.node_count++; };
    auto add_edge = [&d](int a, int b) {
        d.edges.emplace_back(a, b);
        return static_cast<int>(d.edges.size() - 1);
    };

    const long long n = cf.n();
    int nw, ne, sw, se;
    if (n % 2 == 0) { // 0-tangle: two horizontal strands
        nw = new_node(); ne = new_node(); add_edge(nw, ne);
        sw = new_node(); se = new_node(); add_edge(sw, se);
    } else { // infinity-tangle: two vertical strands
        nw = new_node(); sw = new_node(); add_edge(nw, sw);
        ne = new_node(); se = new_node(); add_edge(ne, se);
    }

    for (long long j = n; j >= 1; --j) {
        long long count = checked_ll(cf.terms[static_cast<size_t>(j - 1)]);
        bool vertical = (j % 2 == 1);
        for (long long t = 0; t < count; ++t) {
            PlanarDiagram::Crossing x;
            x.region = j;
            x.over_main = true;
            for (int s = 0; s < 4; ++s) x.port[s] = new_node();
            if (!vertical) { // right twist: west slots attach to the old east ends
                add_edge(ne, x.port[kNW]);
                add_edge(se, x.port[kSW]);
                ne = x.port[kNE];
                se = x.port[kSE];
            } else { // bottom twist: north slots attach to the old south ends
                add_edge(sw, x.port[kNW]);
                add_edge(se, x.port[kNE]);
                sw = x.port[kSW];
                se = x.port[kSE];
            }
            d.crossings.push_back(x);
        }
    }

    d.west_edge = add_edge(nw, sw);
    d.east_edge = add_edge(ne, se);
    d.nw_node = nw;
    d.ne_node = ne;
    d.sw_node = sw;
    d.se_node = se;
    return d;
}

PlanarDiagram build_diagram(const Fraction& alpha) {
    if (!in_open_unit_interval(alpha))
        throw out_of_range("build_diagram needs alpha in (0,1), got " + alpha.str());
    return build_diagram_cf(cf_expand(alpha, Parity::Any));
}

int component_count(const PlanarDiagram& d) { return trace_diagram(d).components + d.free_loops; }

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[static_cast<size_t>(a)] != a) {
            parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
            a = parent[static_cast<size_t>(a)];
        }
        return a;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<size_t>(b)] = a;
    }
};

} // namespace

LaurentPoly state_sum_bracket(const PlanarDiagram& d) {
    const long long c = d.crossing_count();
    if (c > 22) throw too_many_crossings("state sum limited to 22 crossings, got " + std::to_string(c));

    // counts[exp_index][loops-1]: exponent = #A - #B = 2*exp_index - c
    std::vector<std::vector<long long>> counts(
        static_cast<size_t>(c + 1),
        std::vector<long long>(static_cast<size_t>(d.node_count / 2 + d.free_loops + 2), 0));

    const size_t nn = static_cast<size_t>(d.node_count);
    for (unsigned long long state = 0; state < (1ULL << c); ++state) {
        UnionFind uf(nn);
        for (const auto& [a, b] : d.edges) uf.unite(a, b);
        long long a_count = 0;
        for (long long i = 0; i < c; ++i) {
            const auto& x = d.crossings[static_cast<size_t>(i)];
            bool choose_a = (state >> i) & 1ULL;
            if (choose_a) ++a_count;
            // Kauffman rule: with the NW-SE strand on top the A-smoothing is
            // the horizontal one; with NE-SW on top it is the vertical one.
            bool horizontal = (x.over_main == choose_a);
            if (horizontal) {
                uf.unite(x.port[kNW], x.port[kNE]);
                uf.unite(x.port[kSW], x.port[kSE]);
            } else {
                uf.unite(x.port[kNW], x.port[kSW]);
                uf.unite(x.port[kNE], x.port[kSE]);
            }
        }
        long long loops = d.free_loops;
        for (size_t v = 0; v < nn; ++v)
            if (uf.find(static_cast<int>(v)) == static_cast<int>(v)) ++loops;
        if (loops < 1) throw error("state sum needs at least one circle");
        ++counts[static_cast<size_t>(a_count)][static_cast<size_t>(loops - 1)];
    }

    const LaurentPoly delta = LaurentPoly::loop_value();
    std::vector<LaurentPoly> delta_pow{LaurentPoly::one()};
    LaurentPoly out = LaurentPoly::zero();
    for (size_t ai = 0; ai < counts.size(); ++ai)
        for (size_t li = 0; li < counts[ai].size(); ++li) {
            if (counts[ai][li] == 0) continue;
            while (delta_pow.size() <= li) delta_pow.push_back(delta_pow.back() * delta);
            long long exp = 2 * static_cast<long long>(ai) - c;
            out = out + LaurentPoly::monomial(counts[ai][li], exp) * delta_pow[li];
        }
    return out;
}

OrientedDiagram orient_diagram(const PlanarDiagram& d, OrientationKind kind) {
    Trace tr = trace_diagram(d);
    OrientedDiagram od;
    od.diagram = d;
    od.kind = kind;
    od.components = tr.components;

    if (tr.components > 2) throw error("rational link diagrams have at most two components");
    if (kind != OrientationKind::Principal && tr.components != 2)
        throw not_two_component("orientation variants need a two-component link");

    int west_comp = tr.edge_component[static_cast<size_t>(d.west_edge)];
    int east_comp = tr.edge_component[static_cast<size_t>(d.east_edge)];

    // flip[comp] reverses the traced direction of that component.
    std::vector<int> flip(static_cast<size_t>(tr.components), 0);
    // Principal: west arc traversed upward, sw -> nw.
    bool west_up = tr.edge_forward[static_cast<size_t>(d.west_edge)]
                       ? (d.edges[static_cast<size_t>(d.west_edge)].first == d.sw_node)
                       : (d.edges[static_cast<size_t>(d.west_edge)].second == d.sw_node);
    flip[static_cast<size_t>(west_comp)] = west_up ? 0 : 1;
    if (tr.components == 2) {
        bool east_up = tr.edge_forward[static_cast<size_t>(d.east_edge)]
                           ? (d.edges[static_cast<size_t>(d.east_edge)].first == d.se_node)
                           : (d.edges[static_cast<size_t>(d.east_edge)].second == d.se_node);
        flip[static_cast<size_t>(east_comp)] = east_up ? 0 : 1;
        switch (kind) {
            case OrientationKind::Principal: break;
            case OrientationKind::PlusMinus: flip[static_cast<size_t>(east_comp)] ^= 1; break;
            case OrientationKind::MinusPlus: flip[static_cast<size_t>(west_comp)] ^= 1; break;
            case OrientationKind::MinusMinus:
                flip[static_cast<size_t>(west_comp)] ^= 1;
                flip[static_cast<size_t>(east_comp)] ^= 1;
                break;
        }
    }

    od.crossing_signs.assign(d.crossings.size(), 0);
    for (size_t ci = 0; ci < d.crossings.size(); ++ci) {
        const auto& pm = tr.passes[static_cast<size_t>(tr.by_crossing[ci][0])]; // NW-SE strand
        const auto& pa = tr.passes[static_cast<size_t>(tr.by_crossing[ci][1])]; // NE-SW strand
        auto dir = [&](const Pass& p) {
            int entry = p.entry_slot, exit = p.exit_slot;
            if (flip[static_cast<size_t>(p.component)]) std::swap(entry, exit);
            return std::pair<int, int>(kSlotX[exit] - kSlotX[entry], kSlotY[exit] - kSlotY[entry]);
        };
        auto [ox, oy] = dir(d.crossings[ci].over_main ? pm : pa);
        auto [ux, uy] = dir(d.crossings[ci].over_main ? pa : pm);
        long long cross = static_cast<long long>(ox) * uy - static_cast<long long>(oy) * ux;
        // +1 when the under direction turned a quarter counterclockwise gives
        // the over direction.
        od.crossing_signs[ci] = cross < 0 ? 1 : -1;
    }
    return od;
}

Int writhe_of(const OrientedDiagram& od) {
    Int w = 0;
    for (int s : od.crossing_signs) w += s;
    return w;
}

std::vector<int> region_signs(const OrientedDiagram& od) {
    const long long n = od.diagram.cf.n();
    std::vector<int> out(static_cast<size_t>(n), 0);
    for (size_t ci = 0; ci < od.diagram.crossings.size(); ++ci) {
        long long j = od.diagram.crossings[ci].region;
        int& slot = out[static_cast<size_t>(j - 1)];
        if (slot == 0) slot = od.crossing_signs[ci];
        else if (slot != od.crossing_signs[ci])
            throw error("mixed crossing signs inside one twist region");
    }
    return out;
}

std::string export_pd(const PlanarDiagram& d) {
    Trace tr = trace_diagram(d);

    int west_comp = tr.edge_component[static_cast<size_t>(d.west_edge)];
    int east_comp = tr.edge_component[static_cast<size_t>(d.east_edge)];
    auto comp_reversed = [&](int comp) {
        int anchor_edge = (comp == west_comp) ? d.west_edge : d.east_edge;
        int bottom = (comp == west_comp) ? d.sw_node : d.se_node;
        bool up = tr.edge_forward[static_cast<size_t>(anchor_edge)]
                      ? (d.edges[static_cast<size_t>(anchor_edge)].first == bottom)
                      : (d.edges[static_cast<size_t>(anchor_edge)].second == bottom);
        return !up;
    };
    (void)east_comp;

    // Arc labels along the oriented traversal; a new arc starts after each
    // underpass.
    std::vector<int> edge_arc(d.edges.size(), -1);
    std::vector<int> pass_entry_slot(tr.passes.size(), -1);
    std::vector<int> pass_in_arc(tr.passes.size(), -1);
    int next_arc = 0;

    for (int comp = 0; comp < tr.components; ++comp) {
        std::vector<Item> items = tr.component_items[static_cast<size_t>(comp)];
        bool rev = comp_reversed(comp);
        if (rev) std::reverse(items.begin(), items.end());
        auto oriented_entry = [&](const Pass& p) { return rev ? p.exit_slot : p.entry_slot; };
        auto is_under = [&](const Pass& p) {
            bool on_main = (p.entry_slot == kNW || p.entry_slot == kSE);
            return d.crossings[static_cast<size_t>(p.crossing)].over_main != on_main;
        };
        // Start right after an underpass so arcs need no end-of-cycle merge.
        size_t start = 0;
        long long unders = 0;
        for (size_t i = 0; i < items.size(); ++i)
            if (items[i].is_pass && is_under(tr.passes[static_cast<size_t>(items[i].id)])) {
                start = (i + 1) % items.size();
                ++unders;
            }
        int first_arc = ++next_arc;
        int cur = first_arc;
        long long seen_unders = 0;
        for (size_t k = 0; k < items.size(); ++k) {
            const Item& it = items[(start + k) % items.size()];
            if (!it.is_pass) {
                edge_arc[static_cast<size_t>(it.id)] = cur;
            } else {
                const Pass& p = tr.passes[static_cast<size_t>(it.id)];
                pass_entry_slot[static_cast<size_t>(it.id)] = oriented_entry(p);
                pass_in_arc[static_cast<size_t>(it.id)] = cur;
                if (is_under(p)) {
                    ++seen_unders;
                    cur = (seen_unders == unders) ? first_arc : ++next_arc;
                }
            }
        }
    }

    auto nodes = node_table(d);
    std::ostringstream os;
    for (size_t ci = 0; ci < d.crossings.size(); ++ci) {
        const auto& x = d.crossings[ci];
        int under_pass = tr.by_crossing[ci][x.over_main ? 1 : 0];
        int start = pass_entry_slot[static_cast<size_t>(under_pass)];
        // counterclockwise slot order: NE, NW, SW, SE
        static const int ccw[4] = {kNE, kNW, kSW, kSE};
        int pos = 0;
        while (ccw[pos] != start) ++pos;
        os << "X(";
        for (int k = 0; k < 4; ++k) {
            int slot = ccw[(pos + k) % 4];
            int node = x.port[static_cast<size_t>(slot)];
            int e = nodes[static_cast<size_t>(node)].edge_ids[0];
            os << edge_arc[static_cast<size_t>(e)] << (k == 3 ? ")" : ",");
        }
        os << "\n";
    }
    return os.str();
}

} // namespace friezelink

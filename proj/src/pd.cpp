#include "csurg/pd.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace csurg::pd {

int Diagram::component_count() const {
    std::vector<bool> seen(edge_count + 1, false);
    int comps = 0;
    for (int e = 1; e <= edge_count; ++e) {
        if (seen[e] || next_edge[e] == 0) continue;
        ++comps;
        int x = e;
        while (!seen[x]) {
            seen[x] = true;
            x = next_edge[x];
        }
    }
    return comps;
}

Diagram resolve(const PDCode& pd) {
    Diagram d;
    d.unknots = pd.unknots;
    int max_edge = 0;
    std::map<int, int> uses;
    for (const auto& t : pd.crossings)
        for (int v : t) {
            if (v < 1) throw PDError("arc labels must be positive");
            max_edge = std::max(max_edge, v);
            ++uses[v];
        }
    for (auto& [e, n] : uses)
        if (n != 2) throw PDError("arc label " + std::to_string(e) + " appears " +
                                  std::to_string(n) + " times (want 2)");
    d.edge_count = max_edge;

    const int n = int(pd.crossings.size());
    // over orientation per crossing: +1 means b->d, -1 means d->b, 0 unknown
    std::vector<int> over_dir(n, 0);
    struct Occ {
        int cr, slot;
    };
    std::vector<std::vector<Occ>> occ(max_edge + 1);
    for (int k = 0; k < n; ++k)
        for (int s = 0; s < 4; ++s) occ[pd.crossings[k][s]].push_back({k, s});

    // Every edge has one head (entering) and one tail occurrence. Under slots
    // are fixed (0 head, 2 tail); over slots depend on the crossing variable:
    // slot 1 is the head iff over_dir = +1, slot 3 iff over_dir = -1.
    std::vector<std::vector<std::pair<int, int>>> rel(n);  // (other crossing, sign relation)
    auto force = [&](int k, int dir) {
        if (over_dir[k] == 0) over_dir[k] = dir;
        else if (over_dir[k] != dir)
            throw PDError("contradictory over-strand orientations in PD code");
    };
    for (int e = 1; e <= max_edge; ++e) {
        if (occ[e].size() != 2) continue;
        auto [k1, s1] = occ[e][0];
        auto [k2, s2] = occ[e][1];
        bool u1 = s1 == 0 || s1 == 2, u2 = s2 == 0 || s2 == 2;
        if (u1 && u2) {
            if (s1 == s2) throw PDError("edge " + std::to_string(e) + " enters or leaves twice");
            continue;
        }
        if (u1 != u2) {
            int su = u1 ? s1 : s2;
            int ko = u1 ? k2 : k1;
            int so = u1 ? s2 : s1;
            bool head_over = su == 2;  // opposite role of the under occurrence
            int dir = (so == 1) == head_over ? +1 : -1;
            force(ko, dir);
            continue;
        }
        // both over: h(s1,v1) = -h(s2,v2) with h(s,v) = (s==1 ? v : -v)
        if (k1 == k2) continue;  // same variable, tautological
        int a1 = s1 == 1 ? +1 : -1;
        int a2 = s2 == 1 ? +1 : -1;
        rel[k1].push_back({k2, -a1 * a2});
        rel[k2].push_back({k1, -a1 * a2});
    }
    // propagate relations; unanchored components fall back to the
    // consecutive-numbering reading of the representative's over pair
    for (int start = 0; start < n; ++start) {
        if (over_dir[start] == 0) {
            int b = pd.crossings[start][1], dd = pd.crossings[start][3];
            int guess;
            if (dd == b + 1) guess = +1;
            else if (b == dd + 1) guess = -1;
            else guess = (b > dd) ? +1 : -1;  // wraparound
            over_dir[start] = guess;
        }
        // BFS from any assigned node through its relations
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int k = stack.back();
            stack.pop_back();
            for (auto [o, r] : rel[k]) {
                int want = over_dir[k] * r;
                if (over_dir[o] == 0) {
                    over_dir[o] = want;
                    stack.push_back(o);
                } else if (over_dir[o] != want) {
                    throw PDError("contradictory over-strand orientations in PD code");
                }
            }
        }
    }

    d.next_edge.assign(max_edge + 1, 0);
    for (int k = 0; k < n; ++k) {
        const auto& t = pd.crossings[k];
        Crossing c{};
        c.under_in = t[0];
        c.under_out = t[2];
        if (over_dir[k] > 0) {
            c.over_in = t[1];
            c.over_out = t[3];
            c.sign = -1;
        } else {
            c.over_in = t[3];
            c.over_out = t[1];
            c.sign = +1;
        }
        d.next_edge[c.under_in] = c.under_out;
        d.next_edge[c.over_in] = c.over_out;
        d.crossings.push_back(c);
    }
    // consistency: every used edge has a successor
    for (int e = 1; e <= max_edge; ++e)
        if (occ[e].size() == 2 && d.next_edge[e] == 0)
            throw PDError("inconsistent orientation data in PD code");
    return d;
}

PDCode to_pd(const Diagram& d) {
    PDCode pd;
    pd.unknots = d.unknots;
    for (const auto& c : d.crossings) {
        if (c.sign > 0)
            pd.crossings.push_back({c.under_in, c.over_out, c.under_out, c.over_in});
        else
            pd.crossings.push_back({c.under_in, c.over_in, c.under_out, c.over_out});
    }
    return pd;
}

namespace {

std::vector<std::vector<int>> edge_components(const Diagram& d) {
    std::vector<bool> seen(d.edge_count + 1, false);
    std::vector<std::vector<int>> comps;
    for (int e = 1; e <= d.edge_count; ++e) {
        if (seen[e] || d.next_edge[e] == 0) continue;
        std::vector<int> cyc;
        int x = e;
        while (!seen[x]) {
            seen[x] = true;
            cyc.push_back(x);
            x = d.next_edge[x];
        }
        comps.push_back(std::move(cyc));
    }
    return comps;
}

}  // namespace

PDCode canonical_pd(const PDCode& pd) {
    if (pd.crossings.empty()) return pd;
    Diagram d = resolve(pd);
    auto comps = edge_components(d);
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });

    std::vector<int> comp_idx(comps.size());
    std::iota(comp_idx.begin(), comp_idx.end(), 0);

    PDCode best;
    bool have = false;
    long long combos = 1;
    for (const auto& c : comps) combos *= static_cast<long long>(c.size());
    long long perms = 1;
    for (size_t i = 2; i <= comps.size(); ++i) perms *= static_cast<long long>(i);
    if (combos * perms > 200000) {
        // too many relabelings to scan; fall back to a sorted copy
        PDCode out = pd;
        std::sort(out.crossings.begin(), out.crossings.end());
        return out;
    }

    std::vector<size_t> start(comps.size(), 0);
    do {
        // iterate over starting edges per component (odometer)
        std::fill(start.begin(), start.end(), 0);
        for (;;) {
            std::vector<int> relabel(d.edge_count + 1, 0);
            int next = 1;
            for (size_t ci = 0; ci < comp_idx.size(); ++ci) {
                const auto& cyc = comps[comp_idx[ci]];
                size_t s = start[ci];
                for (size_t k = 0; k < cyc.size(); ++k)
                    relabel[cyc[(s + k) % cyc.size()]] = next++;
            }
            PDCode cand;
            cand.unknots = pd.unknots;
            for (const auto& t : pd.crossings)
                cand.crossings.push_back(
                    {relabel[t[0]], relabel[t[1]], relabel[t[2]], relabel[t[3]]});
            std::sort(cand.crossings.begin(), cand.crossings.end());
            if (!have || cand.crossings < best.crossings) {
                best = cand;
                have = true;
            }
            // odometer increment
            size_t i = 0;
            for (; i < start.size(); ++i) {
                if (++start[i] < comps[comp_idx[i]].size()) break;
                start[i] = 0;
            }
            if (i == start.size()) break;
        }
    } while (std::next_permutation(comp_idx.begin(), comp_idx.end()));
    return best;
}

namespace {

// removes one R1 kink or R2 bigon; true when something was removed
bool reduce_once(Diagram& d) {
    // R1: an edge looping from a crossing straight back into itself
    for (size_t k = 0; k < d.crossings.size(); ++k) {
        const Crossing c = d.crossings[k];
        bool loop_a = c.under_out == c.over_in;
        bool loop_b = c.over_out == c.under_in;
        if (!loop_a && !loop_b) continue;
        d.crossings.erase(d.crossings.begin() + k);
        if (loop_a && loop_b) {
            ++d.unknots;  // isolated one-crossing circle
            d.next_edge[c.under_out] = 0;
            d.next_edge[c.over_out] = 0;
        } else if (loop_a) {
            d.next_edge[c.under_in] = c.over_out;
            d.next_edge[c.under_out] = 0;
        } else {
            d.next_edge[c.over_in] = c.under_out;
            d.next_edge[c.over_out] = 0;
        }
        return true;
    }
    // R2: two crossings joined by an over-over edge and an under-under edge
    for (size_t k1 = 0; k1 < d.crossings.size(); ++k1) {
        for (size_t k2 = 0; k2 < d.crossings.size(); ++k2) {
            if (k1 == k2) continue;
            const Crossing a = d.crossings[k1];
            const Crossing b = d.crossings[k2];
            if (a.over_out != b.over_in) continue;
            if (a.over_out == a.over_in || b.over_out == b.over_in) continue;
            bool parallel = a.under_out == b.under_in && a.under_out != a.under_in;
            bool anti = b.under_out == a.under_in && b.under_out != b.under_in;
            if (!parallel && !anti) continue;
            // the bigon must be embedded: its two edges distinct
            if (a.over_out == (parallel ? a.under_out : b.under_out)) continue;
            Diagram nd = d;
            nd.crossings.erase(nd.crossings.begin() + std::max(k1, k2));
            nd.crossings.erase(nd.crossings.begin() + std::min(k1, k2));
            nd.next_edge[a.over_out] = 0;
            if (parallel) {
                nd.next_edge[a.under_out] = 0;
                nd.next_edge[a.over_in] = b.over_out;
                nd.next_edge[a.under_in] = b.under_out;
            } else {
                nd.next_edge[b.under_out] = 0;
                nd.next_edge[a.over_in] = b.over_out;
                nd.next_edge[b.under_in] = a.under_out;
            }
            d = std::move(nd);
            return true;
        }
    }
    return false;
}

}  // namespace

PDCode simplified(const PDCode& pd) {
    if (pd.crossings.empty()) return pd;
    Diagram d = resolve(pd);
    while (reduce_once(d)) {}
    // renumber and collect circles: reuse the canonical walk in to_pd via a
    // fresh resolve of the emitted tuples
    // count circles without crossings
    std::vector<bool> incident(d.next_edge.size(), false);
    for (const auto& c : d.crossings) {
        incident[c.under_in] = incident[c.under_out] = true;
        incident[c.over_in] = incident[c.over_out] = true;
    }
    std::vector<bool> seen(d.next_edge.size(), false);
    int circles = 0;
    for (int e = 1; e < int(d.next_edge.size()); ++e) {
        if (d.next_edge[e] == 0 || seen[e]) continue;
        bool has_crossing = false;
        int x = e;
        while (!seen[x]) {
            seen[x] = true;
            if (incident[x]) has_crossing = true;
            x = d.next_edge[x];
        }
        if (!has_crossing) ++circles;
    }
    // relabel edges consecutively along each surviving strand
    std::map<int, int> relabel;
    int next = 1;
    std::vector<bool> walked(d.next_edge.size(), false);
    PDCode out;
    out.unknots = d.unknots + circles;
    std::map<int, std::pair<int, bool>> enters;
    for (int k = 0; k < int(d.crossings.size()); ++k) {
        enters[d.crossings[k].under_in] = {k, true};
        enters[d.crossings[k].over_in] = {k, false};
    }
    std::vector<Crossing> ncr(d.crossings.size());
    for (size_t k = 0; k < d.crossings.size(); ++k) ncr[k].sign = d.crossings[k].sign;
    for (const auto& c : d.crossings) {
        for (int s : {c.under_out, c.over_out}) {
            if (walked[s]) continue;
            // walk this component from segment start s
            std::vector<std::pair<int, bool>> passes;
            int e = s;
            do {
                walked[e] = true;
                auto it = enters.find(e);
                if (it == enters.end()) {
                    e = d.next_edge[e];
                } else {
                    passes.emplace_back(it->second);
                    e = it->second.second ? d.crossings[it->second.first].under_out
                                          : d.crossings[it->second.first].over_out;
                }
            } while (e != s);
            int first = next;
            int m = int(passes.size());
            for (int i = 0; i < m; ++i) {
                auto [k, under] = passes[i];
                int in_label = first + i, out_label = first + (i + 1) % m;
                if (under) {
                    ncr[k].under_in = in_label;
                    ncr[k].under_out = out_label;
                } else {
                    ncr[k].over_in = in_label;
                    ncr[k].over_out = out_label;
                }
            }
            next = first + m;
        }
    }
    Diagram nd;
    nd.crossings = std::move(ncr);
    nd.unknots = out.unknots;
    nd.edge_count = next - 1;
    return to_pd(nd);
}

std::string pd_key(const PDCode& pd) {
    std::ostringstream os;
    os << pd.unknots << ';';
    for (const auto& t : pd.crossings) os << t[0] << ',' << t[1] << ',' << t[2] << ',' << t[3] << ';';
    return os.str();
}

}  // namespace csurg::pd

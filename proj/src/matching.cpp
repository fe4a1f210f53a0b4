#include "fairdist/matching.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fairdist {

namespace {

[[noreturn]] void fail(const char* what) {
    throw std::logic_error(std::string("matching solver invariant violated: ") + what);
}

void require(bool cond, const char* what) {
    if (!cond) fail(what);
}

// Exact maximum-weight matching on a general graph via the primal-dual
// blossom method, following the classic array-based formulation (endpoint
// indices 2k/2k+1 per edge k, label codes 0 = free, 1 = S, 2 = T,
// 5 = breadcrumb, blossom ids n..2n-1 stacked above the vertex ids). All
// arithmetic is rational, so every comparison below is exact, and the
// complementary-slackness certificate is re-verified after every solve.
class BlossomMatcher {
  public:
    BlossomMatcher(const Graph& g, const std::vector<Rational>& w)
        : nvertex(g.vertex_count()), nedge(g.edge_count()), ew(w) {
        ei.resize(nedge);
        ej.resize(nedge);
        for (int k = 0; k < nedge; ++k) {
            ei[k] = g.edges()[k].first;
            ej[k] = g.edges()[k].second;
        }
        maxweight = 0;
        for (const Rational& x : w)
            if (x > maxweight) maxweight = x;
        endpoint.resize(2 * nedge);
        for (int p = 0; p < 2 * nedge; ++p)
            endpoint[p] = (p % 2 == 0) ? ei[p / 2] : ej[p / 2];
        neighbend.assign(nvertex, {});
        for (int k = 0; k < nedge; ++k) {
            neighbend[ei[k]].push_back(2 * k + 1);
            neighbend[ej[k]].push_back(2 * k);
        }
        mate.assign(nvertex, -1);
        label.assign(2 * nvertex, 0);
        labelend.assign(2 * nvertex, -1);
        inblossom.resize(nvertex);
        for (int v = 0; v < nvertex; ++v) inblossom[v] = v;
        blossomparent.assign(2 * nvertex, -1);
        blossomchilds.assign(2 * nvertex, {});
        blossombase.assign(2 * nvertex, -1);
        for (int v = 0; v < nvertex; ++v) blossombase[v] = v;
        blossomendps.assign(2 * nvertex, {});
        bestedge.assign(2 * nvertex, -1);
        blossombestedges.assign(2 * nvertex, std::nullopt);
        for (int b = nvertex; b < 2 * nvertex; ++b) unusedblossoms.push_back(b);
        dualvar.assign(2 * nvertex, Rational(0));
        for (int v = 0; v < nvertex; ++v) dualvar[v] = maxweight;
        allowedge.assign(nedge, 0);
    }

    // Runs the solver and returns, per vertex, the partner vertex or -1.
    std::vector<int> solve() {
        if (nedge == 0) return std::vector<int>(nvertex, -1);
        for (int stage = 0; stage < nvertex; ++stage) {
            std::fill(label.begin(), label.end(), 0);
            std::fill(bestedge.begin(), bestedge.end(), -1);
            std::fill(blossombestedges.begin() + nvertex, blossombestedges.end(),
                      std::nullopt);
            std::fill(allowedge.begin(), allowedge.end(), 0);
            queue.clear();
            for (int v = 0; v < nvertex; ++v)
                if (mate[v] == -1 && label[inblossom[v]] == 0) assignLabel(v, 1, -1);
            bool augmented = false;
            while (true) {
                while (!queue.empty() && !augmented) {
                    int v = queue.back();
                    queue.pop_back();
                    require(label[inblossom[v]] == 1, "queued vertex not S");
                    for (int p : neighbend[v]) {
                        int k = p / 2;
                        int w = endpoint[p];
                        if (inblossom[v] == inblossom[w]) continue;
                        if (!allowedge[k]) {
                            Rational kslack = slack(k);
                            if (kslack <= 0) {
                                allowedge[k] = 1;
                            } else if (label[inblossom[w]] == 1) {
                                int b = inblossom[v];
                                if (bestedge[b] == -1 || kslack < slack(bestedge[b]))
                                    bestedge[b] = k;
                            } else if (label[w] == 0) {
                                if (bestedge[w] == -1 || kslack < slack(bestedge[w]))
                                    bestedge[w] = k;
                            }
                        }
                        if (allowedge[k]) {
                            if (label[inblossom[w]] == 0) {
                                assignLabel(w, 2, p ^ 1);
                            } else if (label[inblossom[w]] == 1) {
                                int base = scanBlossom(v, w);
                                if (base >= 0) {
                                    addBlossom(base, k);
                                } else {
                                    augmentMatching(k);
                                    augmented = true;
                                    break;
                                }
                            } else if (label[w] == 0) {
                                require(label[inblossom[w]] == 2, "expected T-blossom");
                                label[w] = 2;
                                labelend[w] = p ^ 1;
                            }
                        }
                    }
                }
                if (augmented) break;

                // No augmenting path under the current duals: compute delta.
                int deltatype = 1;
                Rational delta = dualvar[0];
                for (int v = 1; v < nvertex; ++v)
                    if (dualvar[v] < delta) delta = dualvar[v];
                int deltaedge = -1;
                int deltablossom = -1;
                for (int v = 0; v < nvertex; ++v) {
                    if (label[inblossom[v]] == 0 && bestedge[v] != -1) {
                        Rational d = slack(bestedge[v]);
                        if (d < delta) {
                            delta = d;
                            deltatype = 2;
                            deltaedge = bestedge[v];
                        }
                    }
                }
                for (int b = 0; b < 2 * nvertex; ++b) {
                    if (blossomparent[b] == -1 && label[b] == 1 && bestedge[b] != -1) {
                        Rational d = slack(bestedge[b]) / 2;
                        if (d < delta) {
                            delta = d;
                            deltatype = 3;
                            deltaedge = bestedge[b];
                        }
                    }
                }
                for (int b = nvertex; b < 2 * nvertex; ++b) {
                    if (blossombase[b] >= 0 && blossomparent[b] == -1 &&
                        label[b] == 2 && dualvar[b] < delta) {
                        delta = dualvar[b];
                        deltatype = 4;
                        deltablossom = b;
                    }
                }

                for (int v = 0; v < nvertex; ++v) {
                    if (label[inblossom[v]] == 1)
                        dualvar[v] -= delta;
                    else if (label[inblossom[v]] == 2)
                        dualvar[v] += delta;
                }
                for (int b = nvertex; b < 2 * nvertex; ++b) {
                    if (blossombase[b] >= 0 && blossomparent[b] == -1) {
                        if (label[b] == 1)
                            dualvar[b] += delta;
                        else if (label[b] == 2)
                            dualvar[b] -= delta;
                    }
                }

                if (deltatype == 1) {
                    break;  // optimum reached
                } else if (deltatype == 2) {
                    allowedge[deltaedge] = 1;
                    int i = ei[deltaedge];
                    if (label[inblossom[i]] == 0) i = ej[deltaedge];
                    require(label[inblossom[i]] == 1, "delta2 endpoint not S");
                    queue.push_back(i);
                } else if (deltatype == 3) {
                    allowedge[deltaedge] = 1;
                    int i = ei[deltaedge];
                    require(label[inblossom[i]] == 1, "delta3 endpoint not S");
                    queue.push_back(i);
                } else {
                    expandBlossom(deltablossom, false);
                }
            }
            if (!augmented) break;
            for (int b = nvertex; b < 2 * nvertex; ++b)
                if (blossomparent[b] == -1 && blossombase[b] >= 0 && label[b] == 1 &&
                    dualvar[b] == 0)
                    expandBlossom(b, true);
        }

        verifyOptimum();

        std::vector<int> partner(nvertex, -1);
        for (int v = 0; v < nvertex; ++v)
            if (mate[v] >= 0) partner[v] = endpoint[mate[v]];
        for (int v = 0; v < nvertex; ++v)
            require(partner[v] == -1 || partner[partner[v]] == v, "mate symmetry");
        return partner;
    }

  private:
    int nvertex;
    int nedge;
    std::vector<int> ei, ej;
    std::vector<Rational> ew;
    Rational maxweight;
    std::vector<int> endpoint;
    std::vector<std::vector<int>> neighbend;
    std::vector<int> mate;      // endpoint index of the matched edge, or -1
    std::vector<int> label;     // per vertex/blossom id
    std::vector<int> labelend;  // endpoint through which the label was assigned
    std::vector<int> inblossom;
    std::vector<int> blossomparent;
    std::vector<std::vector<int>> blossomchilds;
    std::vector<int> blossombase;
    std::vector<std::vector<int>> blossomendps;
    std::vector<int> bestedge;
    std::vector<std::optional<std::vector<int>>> blossombestedges;
    std::vector<int> unusedblossoms;
    std::vector<Rational> dualvar;
    std::vector<char> allowedge;
    std::vector<int> queue;

    Rational slack(int k) const {
        Rational s = dualvar[ei[k]] + dualvar[ej[k]] - Rational(2) * ew[k];
        return s;
    }

    void collectLeaves(int b, std::vector<int>& out) const {
        if (b < nvertex) {
            out.push_back(b);
            return;
        }
        for (int t : blossomchilds[b]) collectLeaves(t, out);
    }

    std::vector<int> leaves(int b) const {
        std::vector<int> out;
        collectLeaves(b, out);
        return out;
    }

    void assignLabel(int w, int t, int p) {
        int b = inblossom[w];
        require(label[w] == 0 && label[b] == 0, "relabeling a labeled vertex");
        label[w] = label[b] = t;
        labelend[w] = labelend[b] = p;
        bestedge[w] = bestedge[b] = -1;
        if (t == 1) {
            std::vector<int> lv = leaves(b);
            queue.insert(queue.end(), lv.begin(), lv.end());
        } else {
            int base = blossombase[b];
            require(mate[base] >= 0, "T-blossom base unmatched");
            assignLabel(endpoint[mate[base]], 1, mate[base] ^ 1);
        }
    }

    // Traces back from v and w; returns the base of a new blossom or -1 when
    // an augmenting path is found instead.
    int scanBlossom(int v, int w) {
        std::vector<int> path;
        int base = -1;
        while (v != -1 || w != -1) {
            int b = inblossom[v];
            if (label[b] & 4) {
                base = blossombase[b];
                break;
            }
            require(label[b] == 1, "scan expects S-blossom");
            path.push_back(b);
            label[b] = 5;
            require(labelend[b] == mate[blossombase[b]], "scan labelend");
            if (labelend[b] == -1) {
                v = -1;
            } else {
                v = endpoint[labelend[b]];
                b = inblossom[v];
                require(label[b] == 2, "scan expects T-blossom");
                require(labelend[b] >= 0, "scan T labelend");
                v = endpoint[labelend[b]];
            }
            if (w != -1) std::swap(v, w);
        }
        for (int b : path) label[b] = 1;
        return base;
    }

    void addBlossom(int base, int k) {
        int v = ei[k];
        int w = ej[k];
        int bb = inblossom[base];
        int bv = inblossom[v];
        int bw = inblossom[w];
        int b = unusedblossoms.back();
        unusedblossoms.pop_back();
        blossombase[b] = base;
        blossomparent[b] = -1;
        blossomparent[bb] = b;
        std::vector<int> path, endps;
        while (bv != bb) {
            blossomparent[bv] = b;
            path.push_back(bv);
            endps.push_back(labelend[bv]);
            require(label[bv] == 2 ||
                        (label[bv] == 1 && labelend[bv] == mate[blossombase[bv]]),
                    "addBlossom trace v");
            require(labelend[bv] >= 0, "addBlossom labelend v");
            v = endpoint[labelend[bv]];
            bv = inblossom[v];
        }
        path.push_back(bb);
        std::reverse(path.begin(), path.end());
        std::reverse(endps.begin(), endps.end());
        endps.push_back(2 * k);
        while (bw != bb) {
            blossomparent[bw] = b;
            path.push_back(bw);
            endps.push_back(labelend[bw] ^ 1);
            require(label[bw] == 2 ||
                        (label[bw] == 1 && labelend[bw] == mate[blossombase[bw]]),
                    "addBlossom trace w");
            require(labelend[bw] >= 0, "addBlossom labelend w");
            w = endpoint[labelend[bw]];
            bw = inblossom[w];
        }
        require(label[bb] == 1, "addBlossom base label");
        blossomchilds[b] = path;
        blossomendps[b] = endps;
        label[b] = 1;
        labelend[b] = labelend[bb];
        dualvar[b] = 0;
        for (int leaf : leaves(b)) {
            if (label[inblossom[leaf]] == 2) queue.push_back(leaf);
            inblossom[leaf] = b;
        }
        // Recompute the least-slack edges to every neighbouring S-blossom.
        std::vector<int> bestedgeto(2 * nvertex, -1);
        for (int child : path) {
            std::vector<std::vector<int>> nblists;
            if (!blossombestedges[child].has_value()) {
                for (int leaf : leaves(child)) {
                    nblists.emplace_back();
                    for (int p : neighbend[leaf]) nblists.back().push_back(p / 2);
                }
            } else {
                nblists.push_back(*blossombestedges[child]);
            }
            for (const auto& nblist : nblists) {
                for (int ke : nblist) {
                    int i = ei[ke];
                    int j = ej[ke];
                    if (inblossom[j] == b) std::swap(i, j);
                    int bj = inblossom[j];
                    if (bj != b && label[bj] == 1 &&
                        (bestedgeto[bj] == -1 || slack(ke) < slack(bestedgeto[bj])))
                        bestedgeto[bj] = ke;
                }
            }
            blossombestedges[child] = std::nullopt;
            bestedge[child] = -1;
        }
        std::vector<int> keep;
        for (int ke : bestedgeto)
            if (ke != -1) keep.push_back(ke);
        blossombestedges[b] = keep;
        bestedge[b] = -1;
        for (int ke : keep)
            if (bestedge[b] == -1 || slack(ke) < slack(bestedge[b]))
                bestedge[b] = ke;
    }

    void expandBlossom(int b, bool endstage) {
        for (int s : blossomchilds[b]) {
            blossomparent[s] = -1;
            if (s < nvertex) {
                inblossom[s] = s;
            } else if (endstage && dualvar[s] == 0) {
                expandBlossom(s, endstage);
            } else {
                for (int leaf : leaves(s)) inblossom[leaf] = s;
            }
        }
        if (!endstage && label[b] == 2) {
            require(labelend[b] >= 0, "expand T labelend");
            int entrychild = inblossom[endpoint[labelend[b] ^ 1]];
            const std::vector<int>& childs = blossomchilds[b];
            const std::vector<int>& endps = blossomendps[b];
            const int len = static_cast<int>(childs.size());
            auto child_at = [&](int idx) { return childs[((idx % len) + len) % len]; };
            auto endp_at = [&](int idx) { return endps[((idx % len) + len) % len]; };
            int j = static_cast<int>(
                std::find(childs.begin(), childs.end(), entrychild) - childs.begin());
            require(j < len, "entry child missing");
            int jstep, endptrick;
            if (j & 1) {
                j -= len;
                jstep = 1;
                endptrick = 0;
            } else {
                jstep = -1;
                endptrick = 1;
            }
            int p = labelend[b];
            while (j != 0) {
                label[endpoint[p ^ 1]] = 0;
                label[endpoint[endp_at(j - endptrick) ^ endptrick ^ 1]] = 0;
                assignLabel(endpoint[p ^ 1], 2, p);
                allowedge[endp_at(j - endptrick) / 2] = 1;
                j += jstep;
                p = endp_at(j - endptrick) ^ endptrick;
                allowedge[p / 2] = 1;
                j += jstep;
            }
            int bv = child_at(j);
            label[endpoint[p ^ 1]] = label[bv] = 2;
            labelend[endpoint[p ^ 1]] = labelend[bv] = p;
            bestedge[bv] = -1;
            j += jstep;
            while (child_at(j) != entrychild) {
                int bw = child_at(j);
                if (label[bw] == 1) {
                    j += jstep;
                    continue;
                }
                int reached = -1;
                for (int leaf : leaves(bw))
                    if (label[leaf] != 0) {
                        reached = leaf;
                        break;
                    }
                if (reached != -1) {
                    require(label[reached] == 2, "expand relabel");
                    require(inblossom[reached] == bw, "expand inblossom");
                    label[reached] = 0;
                    label[endpoint[mate[blossombase[bw]]]] = 0;
                    assignLabel(reached, 2, labelend[reached]);
                }
                j += jstep;
            }
        }
        label[b] = -1;
        labelend[b] = -1;
        blossomchilds[b].clear();
        blossomendps[b].clear();
        blossombase[b] = -1;
        blossombestedges[b] = std::nullopt;
        bestedge[b] = -1;
        unusedblossoms.push_back(b);
    }

    void augmentBlossom(int b, int v) {
        int t = v;
        while (blossomparent[t] != b) t = blossomparent[t];
        if (t >= nvertex) augmentBlossom(t, v);
        std::vector<int>& childs = blossomchilds[b];
        std::vector<int>& endps = blossomendps[b];
        const int len = static_cast<int>(childs.size());
        auto child_at = [&](int idx) { return childs[((idx % len) + len) % len]; };
        auto endp_at = [&](int idx) { return endps[((idx % len) + len) % len]; };
        int i = static_cast<int>(std::find(childs.begin(), childs.end(), t) -
                                 childs.begin());
        require(i < len, "augment child missing");
        int j = i;
        int jstep, endptrick;
        if (i & 1) {
            j -= len;
            jstep = 1;
            endptrick = 0;
        } else {
            jstep = -1;
            endptrick = 1;
        }
        while (j != 0) {
            j += jstep;
            int tc = child_at(j);
            int p = endp_at(j - endptrick) ^ endptrick;
            if (tc >= nvertex) augmentBlossom(tc, endpoint[p]);
            j += jstep;
            tc = child_at(j);
            if (tc >= nvertex) augmentBlossom(tc, endpoint[p ^ 1]);
            mate[endpoint[p]] = p ^ 1;
            mate[endpoint[p ^ 1]] = p;
        }
        std::rotate(childs.begin(), childs.begin() + i, childs.end());
        std::rotate(endps.begin(), endps.begin() + i, endps.end());
        blossombase[b] = blossombase[childs[0]];
        require(blossombase[b] == v, "augment base");
    }

    void augmentMatching(int k) {
        for (int side = 0; side < 2; ++side) {
            int s = side == 0 ? ei[k] : ej[k];
            int p = side == 0 ? 2 * k + 1 : 2 * k;
            while (true) {
                int bs = inblossom[s];
                require(label[bs] == 1, "augment expects S");
                require(labelend[bs] == mate[blossombase[bs]], "augment labelend");
                if (bs >= nvertex) augmentBlossom(bs, s);
                mate[s] = p;
                if (labelend[bs] == -1) break;
                int t = endpoint[labelend[bs]];
                int bt = inblossom[t];
                require(label[bt] == 2, "augment expects T");
                require(labelend[bt] >= 0, "augment T labelend");
                s = endpoint[labelend[bt]];
                int j = endpoint[labelend[bt] ^ 1];
                require(blossombase[bt] == t, "augment T base");
                if (bt >= nvertex) augmentBlossom(bt, j);
                mate[j] = labelend[bt];
                p = labelend[bt] ^ 1;
            }
        }
    }

    // Exact complementary-slackness check: proves the final matching is a
    // maximum-weight matching. Throws on failure.
    void verifyOptimum() const {
        Rational minvertex = dualvar[0];
        for (int v = 1; v < nvertex; ++v)
            if (dualvar[v] < minvertex) minvertex = dualvar[v];
        require(minvertex >= 0, "negative vertex dual");
        for (int b = nvertex; b < 2 * nvertex; ++b)
            require(dualvar[b] >= 0, "negative blossom dual");
        for (int k = 0; k < nedge; ++k) {
            Rational s = slack(k);
            std::vector<int> ibl{ei[k]}, jbl{ej[k]};
            while (blossomparent[ibl.back()] != -1)
                ibl.push_back(blossomparent[ibl.back()]);
            while (blossomparent[jbl.back()] != -1)
                jbl.push_back(blossomparent[jbl.back()]);
            std::reverse(ibl.begin(), ibl.end());
            std::reverse(jbl.begin(), jbl.end());
            for (std::size_t d = 0; d < ibl.size() && d < jbl.size(); ++d) {
                if (ibl[d] != jbl[d]) break;
                s += Rational(2) * dualvar[ibl[d]];
            }
            require(s >= 0, "negative edge slack");
            bool mi = mate[ei[k]] >= 0 && mate[ei[k]] / 2 == k;
            bool mj = mate[ej[k]] >= 0 && mate[ej[k]] / 2 == k;
            if (mi || mj) {
                require(mi && mj, "half-matched edge");
                require(s == 0, "matched edge with positive slack");
            }
        }
        for (int v = 0; v < nvertex; ++v)
            require(mate[v] >= 0 || dualvar[v] == 0, "unmatched vertex with dual");
        for (int b = nvertex; b < 2 * nvertex; ++b) {
            if (blossombase[b] >= 0 && dualvar[b] > 0) {
                require(blossomendps[b].size() % 2 == 1, "even blossom");
                for (std::size_t idx = 1; idx < blossomendps[b].size(); idx += 2) {
                    int p = blossomendps[b][idx];
                    require(mate[endpoint[p]] == (p ^ 1), "loose blossom edge");
                    require(mate[endpoint[p ^ 1]] == p, "loose blossom edge");
                }
            }
        }
    }
};

void validate_weights(const Graph& g, const std::vector<Rational>& w) {
    if (static_cast<int>(w.size()) != g.edge_count())
        throw std::invalid_argument("weight count does not match edge count");
}

WeightedMatchingResult result_from_edges(const Graph& g,
                                         const std::vector<Rational>& w,
                                         std::vector<int> edge_idx) {
    std::sort(edge_idx.begin(), edge_idx.end());
    WeightedMatchingResult r;
    r.weight = 0;
    for (int k : edge_idx) r.weight += w[k];
    r.is_perfect = static_cast<int>(edge_idx.size()) * 2 == g.vertex_count();
    r.edges = std::move(edge_idx);
    return r;
}

}  // namespace

namespace detail {

WeightedMatchingResult max_weight_matching_exhaustive(const Graph& g,
                                                      const std::vector<Rational>& w) {
    std::vector<int> best;
    Rational best_weight = 0;
    std::vector<int> current;
    Rational current_weight = 0;
    std::vector<char> covered(g.vertex_count(), 0);
    // Depth-first over edge indices in increasing order: members are visited
    // in lexicographic order, so keeping the first strict improvement returns
    // the lexicographically least optimum.
    auto walk = [&](auto&& self, int start) -> void {
        if (current_weight > best_weight) {
            best_weight = current_weight;
            best = current;
        }
        for (int k = start; k < g.edge_count(); ++k) {
            auto [u, v] = g.edges()[k];
            if (covered[u] || covered[v]) continue;
            covered[u] = covered[v] = 1;
            current.push_back(k);
            current_weight += w[k];
            self(self, k + 1);
            current_weight -= w[k];
            current.pop_back();
            covered[u] = covered[v] = 0;
        }
    };
    walk(walk, 0);
    return result_from_edges(g, w, std::move(best));
}

WeightedMatchingResult max_weight_matching_blossom(const Graph& g,
                                                   const std::vector<Rational>& w) {
    BlossomMatcher matcher(g, w);
    std::vector<int> partner = matcher.solve();
    std::vector<int> edge_idx;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (partner[v] > v) {
            auto it = std::lower_bound(g.edges().begin(), g.edges().end(),
                                       std::make_pair(v, partner[v]));
            edge_idx.push_back(static_cast<int>(it - g.edges().begin()));
        }
    }
    return result_from_edges(g, w, std::move(edge_idx));
}

}  // namespace detail

WeightedMatchingResult max_weight_matching(const Graph& g,
                                           const std::vector<Rational>& w) {
    validate_weights(g, w);
    if (g.vertex_count() < detail::kExhaustiveMatchingThreshold)
        return detail::max_weight_matching_exhaustive(g, w);
    return detail::max_weight_matching_blossom(g, w);
}

std::optional<WeightedMatchingResult> max_weight_perfect_matching(
    const Graph& g, const std::vector<Rational>& w) {
    validate_weights(g, w);
    // Uniform bonus per matched edge dominating the total absolute weight:
    // maximum weight then prefers maximum cardinality first, and among
    // perfect matchings the bonus is constant.
    Rational bonus = 1;
    for (const Rational& x : w) bonus += abs(x);
    std::vector<Rational> boosted(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) {
        Rational bw = w[k] + Rational(2) * bonus;
        boosted[k] = bw;
    }
    WeightedMatchingResult r = max_weight_matching(g, boosted);
    if (!r.is_perfect) return std::nullopt;
    return result_from_edges(g, w, std::move(r.edges));
}

}  // namespace fairdist

#include "hypershell/shell.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace hypershell {

int LabelRegistry::id(const Mat3& m, const Word& w) {
    std::string k = m.key();
    auto it = index_.find(k);
    if (it != index_.end()) {
        int i = it->second;
        if (!w.empty() && (words_[i].empty() || w.size() < words_[i].size())) words_[i] = w;
        return i;
    }
    int i = (int)mats_.size();
    index_.emplace(std::move(k), i);
    mats_.push_back(m);
    words_.push_back(w);
    return i;
}

int LabelRegistry::lookup(const Mat3& m) const {
    auto it = index_.find(m.key());
    return it == index_.end() ? -1 : it->second;
}

SelectionRule selection_rule(const Mat3& a, const Mat3& b, const Mat3& c, const Mat3& Q) {
    if (proj_equal(a * b * c, Q)) return SelectionRule::PairByA;
    if (proj_equal(b * c * a, Q)) return SelectionRule::PairByAInverse;
    return SelectionRule::Reject;
}

namespace {

struct Builder {
    const TriangleGroup& G;
    ShellCaps caps;
    Shell out;
    Mat3 Q, P, Pinv;
    Word Pword;

    // braid-length cache between label pairs
    std::map<std::pair<int, int>, std::optional<long>> braid_cache;
    // pyramid identity: (base id, canonical rotation of side ids)
    std::set<std::pair<int, std::vector<int>>> seen;
    std::deque<std::array<std::pair<Mat3, Word>, 3>> todo;

    Builder(const TriangleGroup& g, const ShellCaps& c) : G(g), caps(c) {
        Q = G.Qmat();
        P = G.shift();
        Pinv = P.inverse();
        Pword = G.symmetric() ? parse_word("1j") : parse_word("123");
    }

    std::optional<long> braid_of(int x, int y) {
        auto key = std::minmax(x, y);
        auto it = braid_cache.find(key);
        if (it != braid_cache.end()) return it->second;
        // closed form gives the order cheaply and decides infinite braiding
        // without brute-forcing to the cap
        std::optional<long> n;
        ClosedFormBraid cf = braid_length_closed_form(
            reflection_polar(out.labels.mat(x), G.H), reflection_polar(out.labels.mat(y), G.H),
            G.H, G.u, caps.braid_cap);
        if (auto q = cf.braid()) {
            n = braid_length(out.labels.mat(x), out.labels.mat(y), *q + 2);
            if (n != q) throw std::logic_error("shell: closed-form braid mismatch");
        } else if (cf.status == ClosedFormBraid::Elliptic) {
            n = braid_length(out.labels.mat(x), out.labels.mat(y), caps.braid_cap);
        }
        braid_cache.emplace(key, n);
        return n;
    }

    bool commute(int x, int y) { return braid_of(x, y) == std::optional<long>(2); }

    std::vector<int> side_sequence(int b1, int b2, long n) {
        std::vector<int> sides = {b1, b2};
        Word w1 = out.labels.word(b1), w2 = out.labels.word(b2);
        for (long k = 2; k < n; ++k) {
            const Mat3& prev = out.labels.mat(sides[k - 1]);
            const Mat3& prev2 = out.labels.mat(sides[k - 2]);
            Mat3 next = prev.inverse() * prev2 * prev;
            Word nw = out.labels.word(sides[k - 2]).conjugated_by(out.labels.word(sides[k - 1]).inverse());
            sides.push_back(out.labels.id(next, nw));
        }
        return sides;
    }

    static std::vector<int> canonical_rotation(const std::vector<int>& s) {
        std::vector<int> best = s;
        std::vector<int> cur = s;
        for (size_t i = 1; i < s.size(); ++i) {
            std::rotate(cur.begin(), cur.begin() + 1, cur.end());
            if (cur < best) best = cur;
        }
        return best;
    }

    // enqueue the triangle (a; b, c)
    void enqueue(const Mat3& a, const Word& wa, const Mat3& b, const Word& wb, const Mat3& c,
                 const Word& wc) {
        todo.push_back({std::make_pair(a, wa), std::make_pair(b, wb), std::make_pair(c, wc)});
    }

    // returns false on failure recorded in out.failure
    bool consider(const Mat3& a, const Word& wa, const Mat3& b, const Word& wb, const Mat3& c,
                  const Word& wc) {
        SelectionRule r = selection_rule(a, b, c, Q);
        if (r == SelectionRule::Reject) {
            out.failure = ShellFailure{ShellFailureKind::RejectedTriangle,
                                       word_str(wa) + ";" + word_str(wb) + "," + word_str(wc)};
            return false;
        }
        int aid = out.labels.id(a, wa);
        int b1 = out.labels.id(b, wb);
        int b2 = out.labels.id(c, wc);
        auto n = braid_of(b1, b2);
        if (!n) {
            out.failure = ShellFailure{ShellFailureKind::InfiniteBraid,
                                       word_str(wb) + "," + word_str(wc)};
            return false;
        }
        if (*n == 2) {
            ++out.flat_discarded;
            return true;
        }
        std::vector<int> sides = side_sequence(b1, b2, *n);
        auto key = std::make_pair(aid, canonical_rotation(sides));
        if (seen.count(key)) return true;
        seen.insert(key);
        Pyramid pyr;
        pyr.base = aid;
        pyr.sides = sides;
        pyr.rule = (r == SelectionRule::PairByA) ? 'a' : 'b';
        out.pyramids.push_back(pyr);
        if ((long)out.pyramids.size() > caps.iteration_cap) {
            out.failure = ShellFailure{ShellFailureKind::IterationCap, "pyramid budget exceeded"};
            return false;
        }
        // opposite (paired) pyramid: conjugate by the side-pairing map
        Mat3 g = (pyr.rule == 'a') ? a : a.inverse();
        Word wg = (pyr.rule == 'a') ? wa : wa.inverse();
        enqueue(g * a * g.inverse(), wa.conjugated_by(wg), g * b * g.inverse(), wb.conjugated_by(wg),
                g * c * g.inverse(), wc.conjugated_by(wg));
        // P-conjugate (closing the P-orbit one step at a time)
        enqueue(P * a * Pinv, wa.conjugated_by(Pword), P * b * Pinv, wb.conjugated_by(Pword),
                P * c * Pinv, wc.conjugated_by(Pword));
        return true;
    }

    RidgeKey ridge_key(int a, int x, int y) {
        std::array<int, 3> t = {a, x, y};
        std::array<int, 3> best = t;
        for (int r = 0; r < 2; ++r) {
            std::rotate(t.begin(), t.begin() + 1, t.end());
            best = std::min(best, t);
        }
        bool col = commute(a, x) || commute(x, y) || commute(y, a);
        if (col) {
            std::array<int, 3> rev = {y, x, a};
            for (int r = 0; r < 3; ++r) {
                best = std::min(best, rev);
                std::rotate(rev.begin(), rev.begin() + 1, rev.end());
            }
        }
        return {best, col};
    }

    // all side ridges with the pyramids they lie on
    std::map<RidgeKey, std::vector<std::pair<int, int>>> ridge_incidence() {
        std::map<RidgeKey, std::vector<std::pair<int, int>>> inc;
        for (int pi = 0; pi < (int)out.pyramids.size(); ++pi) {
            const Pyramid& p = out.pyramids[pi];
            for (int k = 0; k < p.n(); ++k) {
                RidgeKey rk = ridge_key(p.base, p.sides[k], p.sides[(k + 1) % p.n()]);
                inc[rk].push_back({pi, k});
            }
        }
        return inc;
    }

    bool drain() {
        while (!todo.empty()) {
            auto t = todo.front();
            todo.pop_front();
            if (!consider(t[0].first, t[0].second, t[1].first, t[1].second, t[2].first, t[2].second))
                return false;
        }
        return true;
    }

    void run() {
        enqueue(G.R1, parse_word("1"), G.R2, parse_word("2"), G.R3, parse_word("3"));
        for (long round = 0; round < caps.iteration_cap; ++round) {
            if (!drain()) return;
            auto inc = ridge_incidence();
            bool added = false;
            for (const auto& [rk, lst] : inc) {
                if (lst.size() != 1) continue;
                const auto& [pi, k] = lst[0];
                const Pyramid& p = out.pyramids[pi];
                int aid = p.base, b1 = p.sides[k], b2 = p.sides[(k + 1) % p.n()];
                const Mat3 &a = out.labels.mat(aid), &b = out.labels.mat(b1), &c = out.labels.mat(b2);
                const Word &wa = out.labels.word(aid), &wb = out.labels.word(b1), &wc = out.labels.word(b2);
                // shift per the ridge-cycle rule; when the shifted pyramid is
                // flat, the partner lies across the degenerate pyramid
                if (p.rule == 'a') {
                    if (commute(aid, b1)) enqueue(b, wb, a, wa, c, wc);
                    else enqueue(c, wc, a, wa, b, wb);
                } else {
                    if (commute(b2, aid)) enqueue(c, wc, b, wb, a, wa);
                    else enqueue(b, wb, c, wc, a, wa);
                }
                added = true;
            }
            if (!added) break;
        }
        if (!todo.empty() && !out.failure)
            out.failure = ShellFailure{ShellFailureKind::IterationCap, "closure did not stabilize"};
        finish();
    }

    void finish() {
        // ridge histogram
        auto inc = ridge_incidence();
        for (const auto& [rk, lst] : inc) out.ridges.incidence_histogram[(long)lst.size()]++;

        // orbit decomposition under P-conjugation
        std::map<std::pair<int, std::vector<int>>, int> index;
        for (int i = 0; i < (int)out.pyramids.size(); ++i)
            index[{out.pyramids[i].base, canonical_rotation(out.pyramids[i].sides)}] = i;
        std::vector<int> orbit_of(out.pyramids.size(), -1);
        for (int i = 0; i < (int)out.pyramids.size(); ++i) {
            if (orbit_of[i] >= 0) continue;
            std::vector<int> orb;
            int cur = i;
            while (orbit_of[cur] < 0) {
                orbit_of[cur] = (int)out.orbits.size();
                orb.push_back(cur);
                const Pyramid& p = out.pyramids[cur];
                Mat3 a = P * out.labels.mat(p.base) * Pinv;
                std::vector<int> sides;
                for (int s : p.sides)
                    sides.push_back(out.labels.id(P * out.labels.mat(s) * Pinv,
                                                  out.labels.word(s).conjugated_by(Pword)));
                auto it = index.find({out.labels.lookup(a), canonical_rotation(sides)});
                if (it == index.end())
                    throw std::logic_error("shell: P-conjugate of a shell pyramid is missing");
                cur = it->second;
            }
            out.orbits.push_back(orb);
        }
        // merge each orbit with the orbit of its opposite-paired pyramid
        std::vector<bool> used(out.orbits.size(), false);
        for (int oi = 0; oi < (int)out.orbits.size(); ++oi) {
            if (used[oi]) continue;
            int pi = out.orbits[oi][0];
            const Pyramid& p = out.pyramids[pi];
            Mat3 g = (p.rule == 'a') ? out.labels.mat(p.base) : out.labels.mat(p.base).inverse();
            Mat3 gi = g.inverse();
            std::vector<int> sides;
            for (int s : p.sides) sides.push_back(out.labels.lookup(g * out.labels.mat(s) * gi));
            int opp_base = out.labels.lookup(g * out.labels.mat(p.base) * gi);
            auto it = index.find({opp_base, canonical_rotation(sides)});
            if (it == index.end()) throw std::logic_error("shell: paired pyramid is missing");
            int oj = orbit_of[it->second];
            used[oi] = used[oj] = true;
            ShellClass cls;
            cls.orbit_index = oi;
            cls.orbit_size = (long)out.orbits[oi].size();
            cls.gon = out.pyramids[pi].n();
            cls.rep_pyramid = pi;
            cls.merged_orbits = {oi};
            if (oj != oi) cls.merged_orbits.push_back(oj);
            out.classes.push_back(cls);
        }
        std::sort(out.classes.begin(), out.classes.end(), [&](const ShellClass& x, const ShellClass& y) {
            if (x.orbit_size != y.orbit_size) return x.orbit_size > y.orbit_size;
            if (x.gon != y.gon) return x.gon < y.gon;
            return x.orbit_index < y.orbit_index;
        });
    }
};

}  // namespace

Shell build_shell(const TriangleGroup& G, const ShellCaps& caps) {
    Builder b(G, caps);
    b.run();
    return std::move(b.out);
}

}  // namespace hypershell

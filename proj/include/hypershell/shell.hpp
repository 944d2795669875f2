#pragma once

#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hypershell/braid.hpp"

namespace hypershell {

/// Registry of group elements up to scalar, giving stable integer ids and
/// keeping the shortest word found for each label.
class LabelRegistry {
public:
    int id(const Mat3& m, const Word& w);
    int lookup(const Mat3& m) const;  // -1 if absent
    const Mat3& mat(int i) const { return mats_[i]; }
    const Word& word(int i) const { return words_[i]; }
    size_t size() const { return mats_.size(); }

private:
    std::unordered_map<std::string, int> index_;
    std::vector<Mat3> mats_;
    std::vector<Word> words_;
};

struct Pyramid {
    int base = -1;           // label id of the base reflection
    std::vector<int> sides;  // n side labels, cyclic, n = br(sides[0], sides[1])
    char rule = 'a';         // 'a': base*s1*s2 = Q (pairing map = base)
                             // 'b': s1*s2*base = Q (pairing map = base^{-1})
    int n() const { return (int)sides.size(); }
};

enum class ShellFailureKind { RejectedTriangle, InfiniteBraid, IterationCap };

struct ShellFailure {
    ShellFailureKind kind;
    std::string detail;
};

struct ShellClass {
    int orbit_index = 0;       // representative P/Q-orbit
    long orbit_size = 0;
    int gon = 0;
    int rep_pyramid = 0;       // index into Shell::pyramids
    std::vector<int> merged_orbits;  // this orbit plus its opposite-paired orbit
};

struct RidgeSummary {
    std::map<long, long> incidence_histogram;  // incidence -> #ridges
    bool all_two() const {
        for (auto& [k, v] : incidence_histogram)
            if (k != 2 && v > 0) return false;
        return true;
    }
};

struct ShellCaps {
    long braid_cap = kDefaultBraidCap;
    long iteration_cap = 10000;  // pyramid budget
};

struct Shell {
    std::vector<Pyramid> pyramids;
    LabelRegistry labels;
    std::vector<std::vector<int>> orbits;  // P/Q-conjugation orbits (pyramid indices)
    std::vector<ShellClass> classes;       // paper-style merged classes
    RidgeSummary ridges;
    std::optional<ShellFailure> failure;
    long flat_discarded = 0;

    bool complete() const { return !failure && ridges.all_two(); }
};

/// The selection rule of the combinatorial algorithm: a triangle a;b,c enters
/// the shell iff abc = Q or bca = Q projectively.
enum class SelectionRule { PairByA, PairByAInverse, Reject };
SelectionRule selection_rule(const Mat3& a, const Mat3& b, const Mat3& c, const Mat3& Q);

/// Builds the P- (or Q-) invariant, side-paired, ridge-closed set of pyramids
/// around p0, starting from the seed triangle 1;2,3.
Shell build_shell(const TriangleGroup& G, const ShellCaps& caps = {});

/// the unordered side-ridge label triple handling commuting-pair collapse
struct RidgeKey {
    std::array<int, 3> cyc;  // canonical rotation; reversal-collapsed if flagged
    bool collapsed;
    bool operator==(const RidgeKey&) const = default;
    bool operator<(const RidgeKey& o) const { return cyc < o.cyc; }
};

}  // namespace hypershell

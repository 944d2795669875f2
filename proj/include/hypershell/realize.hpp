#pragma once

#include "hypershell/shell.hpp"

namespace hypershell {

enum class VertexLocation { Inside, Ideal, Outside };
enum class TopStatus { SingleApex, IdealApex, TruncatedTop };

struct RealizedVertex {
    Vec3 v;
    VertexLocation location;
    std::string role;  // "top" | "mid" | "bottom"
};

struct RealizedPyramid {
    int pyramid_index = -1;
    TopStatus top = TopStatus::SingleApex;
    std::vector<RealizedVertex> vertices;
    std::vector<Vec3> bottom_cycle;        // the bottom polygon, one vertex per side
    std::vector<VertexLocation> bottom_loc;
    bool p0_on_base = false;               // p0 lies on the base complex line
};

enum class Embeddedness { Embedded, NotEmbedded, Unresolved };

struct ShellRealization {
    std::vector<RealizedPyramid> pyramids;
    bool any_ideal_vertex() const;
    std::vector<Vec3> ideal_vertices() const;
};

RealizedPyramid realize(const Pyramid& pyr, const LabelRegistry& labels, const TriangleGroup& G,
                        const Vec3* p0 = nullptr);

/// realize every pyramid of the shell; parallel over pyramids when threads > 1
/// (or the OpenMP default when threads == 0), with a deterministic merge
ShellRealization realize_shell(const Shell& s, const TriangleGroup& G, int threads = 1,
                               bool with_p0 = false);

/// Exact embeddedness of the bottom polygon: the bottom edges are geodesics in
/// the base complex line; in the Klein model they are straight segments and
/// every needed orientation predicate lands back in the cyclotomic field, so
/// the test is decided by exact signs. `precision` is kept for the optional
/// numeric cross-check and Unresolved is reserved for degenerate inputs.
Embeddedness bottom_polygon_embedded(const RealizedPyramid& rp, const Pyramid& pyr,
                                     const LabelRegistry& labels, const TriangleGroup& G,
                                     long precision = 256);

/// p0 test for the known T(5, Hbar2) failure: p0 on the base line (exact) and
/// strictly inside the bottom polygon (exact, Klein model)
bool p0_inside_bottom(const RealizedPyramid& rp, const Pyramid& pyr, const LabelRegistry& labels,
                      const TriangleGroup& G, const Vec3& p0);

/// order of the group generated in PU(2,1) by breadth-first closure, with
/// projective dedup; nullopt when the cap is exceeded. When H is given the
/// generators are required to be reflections sharing a fixed point (the
/// intersection of the first two mirrors).
std::optional<long> stabilizer_order(const std::vector<Mat3>& gens, long cap,
                                     const HermForm* H = nullptr);

/// SVG of a bottom polygon in unit-disk coordinates (1000x1000 viewBox)
std::string bottom_polygon_svg(const RealizedPyramid& rp, const Pyramid& pyr,
                               const LabelRegistry& labels, const TriangleGroup& G);

}  // namespace hypershell

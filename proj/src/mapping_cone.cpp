#include "nervetower/mapping_cone.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace nervetower {

MappingCone mapping_cone(const SimplicialMap& f) {
    const SimplicialComplex& k = f.source();
    const SimplicialComplex& l = f.target();

    // Source vertices reordered by (image position, own position) so the
    // cylinder prisms below are genuine simplices.
    std::vector<std::size_t> src_order(k.num_vertices());
    for (std::size_t v = 0; v < src_order.size(); ++v) src_order[v] = v;
    std::sort(src_order.begin(), src_order.end(), [&](std::size_t a, std::size_t b) {
        return std::make_pair(f.apply(a), a) < std::make_pair(f.apply(b), b);
    });
    std::vector<std::size_t> rank(k.num_vertices());
    for (std::size_t pos = 0; pos < src_order.size(); ++pos) rank[src_order[pos]] = pos;

    std::vector<std::string> vertices;
    for (std::size_t v = 0; v < l.num_vertices(); ++v)
        vertices.push_back("t:" + l.vertex_name(v));
    for (std::size_t pos = 0; pos < src_order.size(); ++pos)
        vertices.push_back("s:" + k.vertex_name(src_order[pos]));
    vertices.push_back("*");

    std::vector<std::vector<std::string>> simplices;
    for (int n = 0; n <= l.dimension(); ++n)
        for (const auto& s : l.simplices(n)) {
            std::vector<std::string> names;
            for (auto v : s) names.push_back("t:" + l.vertex_name(v));
            simplices.push_back(std::move(names));
        }

    simplices.push_back({"*"});
    for (int n = 0; n <= k.dimension(); ++n)
        for (const auto& s : k.simplices(n)) {
            std::vector<std::size_t> ordered = s;
            std::sort(ordered.begin(), ordered.end(),
                      [&](std::size_t a, std::size_t b) { return rank[a] < rank[b]; });
            // cylinder prisms over s: s:v0..s:vj, t:f(vj)..t:f(vn)
            for (std::size_t j = 0; j < ordered.size(); ++j) {
                std::vector<std::string> names;
                for (std::size_t a = 0; a <= j; ++a)
                    names.push_back("s:" + k.vertex_name(ordered[a]));
                std::set<std::string> tail;
                for (std::size_t a = j; a < ordered.size(); ++a)
                    tail.insert("t:" + l.vertex_name(f.apply(ordered[a])));
                names.insert(names.end(), tail.begin(), tail.end());
                simplices.push_back(std::move(names));
            }
            // cone over the source copy
            std::vector<std::string> coned{"*"};
            for (auto v : ordered) coned.push_back("s:" + k.vertex_name(v));
            simplices.push_back(std::move(coned));
        }

    SimplicialComplex cone(std::move(vertices), simplices);
    std::map<std::string, std::string> incl;
    for (std::size_t v = 0; v < l.num_vertices(); ++v)
        incl[l.vertex_name(v)] = "t:" + l.vertex_name(v);
    SimplicialMap target_inclusion(l, cone, incl);
    return MappingCone{std::move(cone), std::move(target_inclusion)};
}

} // namespace nervetower

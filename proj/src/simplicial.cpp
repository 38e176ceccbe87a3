#include "nervetower/simplicial.hpp"

#include <algorithm>
#include <set>

namespace nervetower {

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertices,
                                     const std::vector<std::vector<std::string>>& simplices)
    : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw ValidationError("SimplicialComplex: no vertices");
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (!index_.emplace(vertices_[i], i).second)
            throw ValidationError("SimplicialComplex: duplicate vertex id '" + vertices_[i] + "'");
    }

    std::set<std::vector<std::size_t>> closed;
    for (std::size_t i = 0; i < vertices_.size(); ++i) closed.insert({i});
    std::vector<std::vector<std::size_t>> work;
    for (const auto& s : simplices) {
        std::vector<std::size_t> ix;
        for (const auto& name : s) ix.push_back(vertex_index(name));
        std::sort(ix.begin(), ix.end());
        if (std::adjacent_find(ix.begin(), ix.end()) != ix.end())
            throw ValidationError("SimplicialComplex: simplex with repeated vertex");
        if (ix.empty()) continue;
        if (closed.insert(ix).second) work.push_back(ix);
    }
    // face closure
    while (!work.empty()) {
        auto s = std::move(work.back());
        work.pop_back();
        if (s.size() <= 1) continue;
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            std::vector<std::size_t> f;
            f.reserve(s.size() - 1);
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != drop) f.push_back(s[i]);
            if (closed.insert(f).second) work.push_back(f);
        }
    }

    std::size_t maxdim = 0;
    for (const auto& s : closed) maxdim = std::max(maxdim, s.size() - 1);
    by_dim_.resize(maxdim + 1);
    lookup_.resize(maxdim + 1);
    for (const auto& s : closed) by_dim_[s.size() - 1].push_back(s);
    for (auto& level : by_dim_) std::sort(level.begin(), level.end());
    for (std::size_t n = 0; n <= maxdim; ++n)
        for (std::size_t i = 0; i < by_dim_[n].size(); ++i) lookup_[n][by_dim_[n][i]] = i;
}

std::size_t SimplicialComplex::vertex_index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        throw ValidationError("SimplicialComplex: unknown vertex id '" + name + "'");
    return it->second;
}

const std::vector<std::vector<std::size_t>>& SimplicialComplex::simplices(int n) const {
    static const std::vector<std::vector<std::size_t>> empty;
    if (n < 0 || n > dimension()) return empty;
    return by_dim_[n];
}

long SimplicialComplex::simplex_index(const std::vector<std::size_t>& s) const {
    int n = static_cast<int>(s.size()) - 1;
    if (n < 0 || n > dimension()) return -1;
    auto it = lookup_[n].find(s);
    return it == lookup_[n].end() ? -1 : static_cast<long>(it->second);
}

std::vector<std::vector<std::string>> SimplicialComplex::simplex_names() const {
    std::vector<std::vector<std::string>> out;
    for (int n = 0; n <= dimension(); ++n)
        for (const auto& s : simplices(n)) {
            std::vector<std::string> names;
            for (auto v : s) names.push_back(vertices_[v]);
            out.push_back(std::move(names));
        }
    return out;
}

SimplicialMap::SimplicialMap(const SimplicialComplex& source, const SimplicialComplex& target,
                             std::vector<std::size_t> vertex_map)
    : source_(source), target_(target), vertex_map_(std::move(vertex_map)) {
    validate();
}

SimplicialMap::SimplicialMap(const SimplicialComplex& source, const SimplicialComplex& target,
                             const std::map<std::string, std::string>& by_name)
    : source_(source), target_(target) {
    vertex_map_.resize(source_.num_vertices());
    for (std::size_t v = 0; v < source_.num_vertices(); ++v) {
        auto it = by_name.find(source_.vertex_name(v));
        if (it == by_name.end())
            throw ValidationError("SimplicialMap: vertex '" + source_.vertex_name(v) +
                                  "' has no image");
        vertex_map_[v] = target_.vertex_index(it->second);
    }
    validate();
}

void SimplicialMap::validate() const {
    if (vertex_map_.size() != source_.num_vertices())
        throw ValidationError("SimplicialMap: vertex map size mismatch");
    for (auto v : vertex_map_)
        if (v >= target_.num_vertices()) throw ValidationError("SimplicialMap: image out of range");
    for (int n = 1; n <= source_.dimension(); ++n) {
        for (const auto& s : source_.simplices(n)) {
            std::vector<std::size_t> img;
            for (auto v : s) img.push_back(vertex_map_[v]);
            std::sort(img.begin(), img.end());
            img.erase(std::unique(img.begin(), img.end()), img.end());
            if (!target_.has_simplex(img))
                throw ValidationError("SimplicialMap: image of a simplex is not a simplex");
        }
    }
}

SimplicialMap SimplicialMap::identity(const SimplicialComplex& k) {
    std::vector<std::size_t> id(k.num_vertices());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
    return SimplicialMap(k, k, std::move(id));
}

SimplicialMap SimplicialMap::compose_after(const SimplicialMap& first) const {
    if (first.target_.vertices() != source_.vertices())
        throw ValidationError("SimplicialMap: composition mismatch");
    std::vector<std::size_t> vm(first.source_.num_vertices());
    for (std::size_t v = 0; v < vm.size(); ++v) vm[v] = vertex_map_[first.vertex_map_[v]];
    return SimplicialMap(first.source_, target_, std::move(vm));
}

SimplicialComplex cycle_complex(std::size_t n) {
    if (n < 3) throw ValidationError("cycle_complex: need at least 3 vertices");
    std::vector<std::string> verts;
    std::vector<std::vector<std::string>> simps;
    for (std::size_t i = 0; i < n; ++i) verts.push_back(std::to_string(i));
    for (std::size_t i = 0; i < n; ++i)
        simps.push_back({std::to_string(i), std::to_string((i + 1) % n)});
    return SimplicialComplex(std::move(verts), simps);
}

SimplicialComplex discrete_complex(std::size_t n) {
    if (n == 0) throw ValidationError("discrete_complex: need at least 1 vertex");
    std::vector<std::string> verts;
    for (std::size_t i = 0; i < n; ++i) verts.push_back(std::to_string(i));
    return SimplicialComplex(std::move(verts), {});
}

} // namespace nervetower

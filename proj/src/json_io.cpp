#include "nervetower/json_io.hpp"

#include <limits>

namespace nervetower::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ValidationError("json: " + what); }

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::string str_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_string()) bad(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

std::size_t size_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_unsigned()) bad(std::string("field '") + key + "' must be a nonnegative integer");
    return v.get<std::size_t>();
}

} // namespace

json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

Int int_from_json(const json& j) {
    if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            bad("malformed integer string '" + j.get<std::string>() + "'");
        }
    }
    bad("expected an integer (number or decimal string)");
}

json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

IntMatrix matrix_from_json(const json& j) {
    std::size_t rows = size_field(j, "rows"), cols = size_field(j, "cols");
    const json& entries = field(j, "entries");
    if (!entries.is_array() || entries.size() != rows) bad("matrix entries row count mismatch");
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!entries[i].is_array() || entries[i].size() != cols)
            bad("matrix entries column count mismatch");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = int_from_json(entries[i][c]);
    }
    return m;
}

json group_to_json(const FGAbelianGroup& g) {
    json torsion = json::array();
    for (const auto& t : g.torsion) torsion.push_back(int_to_json(t));
    return json{{"rank", g.free_rank}, {"torsion", std::move(torsion)}};
}

FGAbelianGroup group_from_json(const json& j) {
    const json& torsion = field(j, "torsion");
    if (!torsion.is_array()) bad("group torsion must be an array");
    std::vector<Int> t;
    for (const auto& e : torsion) t.push_back(int_from_json(e));
    return FGAbelianGroup(size_field(j, "rank"), std::move(t));
}

json complex_to_json(const SimplicialComplex& k) {
    json simplices = json::array();
    for (const auto& s : k.simplex_names()) simplices.push_back(s);
    return json{{"vertices", k.vertices()}, {"simplices", std::move(simplices)}};
}

SimplicialComplex complex_from_json(const json& j) {
    const json& v = field(j, "vertices");
    const json& s = field(j, "simplices");
    if (!v.is_array() || !s.is_array()) bad("complex vertices/simplices must be arrays");
    std::vector<std::string> vertices;
    for (const auto& e : v) {
        if (!e.is_string()) bad("vertex names must be strings");
        vertices.push_back(e.get<std::string>());
    }
    std::vector<std::vector<std::string>> simplices;
    for (const auto& simplex : s) {
        if (!simplex.is_array()) bad("each simplex must be an array of vertex names");
        std::vector<std::string> names;
        for (const auto& e : simplex) {
            if (!e.is_string()) bad("simplex entries must be vertex names");
            names.push_back(e.get<std::string>());
        }
        simplices.push_back(std::move(names));
    }
    return SimplicialComplex(std::move(vertices), simplices);
}

json cover_to_json(const Cover& c) {
    json sets = json::array();
    for (std::size_t i = 0; i < c.set_names.size(); ++i)
        sets.push_back(json{{"name", c.set_names[i]}, {"members", c.members[i]}});
    return json{{"points", c.num_points}, {"sets", std::move(sets)}};
}

Cover cover_from_json(const json& j) {
    Cover c;
    c.num_points = size_field(j, "points");
    const json& sets = field(j, "sets");
    if (!sets.is_array()) bad("cover sets must be an array");
    for (const auto& s : sets) {
        c.set_names.push_back(str_field(s, "name"));
        const json& members = field(s, "members");
        if (!members.is_array()) bad("cover set members must be an array");
        std::vector<std::size_t> pts;
        for (const auto& p : members) {
            if (!p.is_number_unsigned()) bad("cover set members must be point indices");
            pts.push_back(p.get<std::size_t>());
        }
        c.members.push_back(std::move(pts));
    }
    c.validate();
    return c;
}

namespace {

std::string tail_kind_name(TailKind t) {
    switch (t) {
        case TailKind::none: return "none";
        case TailKind::periodic: return "periodic";
        case TailKind::surjective_promise: return "surjective";
    }
    return "none";
}

TailKind tail_kind_from(const std::string& s) {
    if (s == "none") return TailKind::none;
    if (s == "periodic") return TailKind::periodic;
    if (s == "surjective") return TailKind::surjective_promise;
    bad("unknown tail kind '" + s + "'");
}

std::string tail_policy_name(TailPolicy t) {
    switch (t) {
        case TailPolicy::none: return "none";
        case TailPolicy::identity: return "identity";
        case TailPolicy::repeat_last_bond: return "repeat_last_bond";
        case TailPolicy::surjective_bonds: return "surjective_bonds";
    }
    return "none";
}

TailPolicy tail_policy_from(const std::string& s) {
    if (s == "none") return TailPolicy::none;
    if (s == "identity") return TailPolicy::identity;
    if (s == "repeat_last_bond") return TailPolicy::repeat_last_bond;
    if (s == "surjective_bonds") return TailPolicy::surjective_bonds;
    bad("unknown tail policy '" + s + "'");
}

std::string ml_name(MLStatus s) {
    switch (s) {
        case MLStatus::holds: return "holds";
        case MLStatus::fails: return "fails";
        case MLStatus::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

std::string lim1_name(Lim1Class c) {
    switch (c) {
        case Lim1Class::zero: return "zero";
        case Lim1Class::nonzero_uncountable: return "nonzero_uncountable";
        case Lim1Class::unknown: return "unknown";
    }
    return "unknown";
}

} // namespace

json group_tower_to_json(const GroupTower& t) {
    json stages = json::array();
    for (const auto& g : t.stages) stages.push_back(group_to_json(g));
    json bonds = json::array();
    for (const auto& b : t.bonds) bonds.push_back(matrix_to_json(b.matrix));
    json out{{"stages", std::move(stages)},
             {"bonds", std::move(bonds)},
             {"tail", tail_kind_name(t.tail)}};
    if (t.tail_endo) out["tail_endo"] = matrix_to_json(t.tail_endo->matrix);
    return out;
}

GroupTower group_tower_from_json(const json& j) {
    GroupTower t;
    const json& stages = field(j, "stages");
    if (!stages.is_array() || stages.empty()) bad("tower needs a nonempty stages array");
    for (const auto& s : stages) t.stages.push_back(group_from_json(s));
    const json& bonds = field(j, "bonds");
    if (!bonds.is_array() || bonds.size() + 1 != t.stages.size())
        bad("tower needs one bond per consecutive stage pair");
    for (std::size_t i = 0; i < bonds.size(); ++i)
        t.bonds.emplace_back(t.stages[i + 1], t.stages[i], matrix_from_json(bonds[i]));
    t.tail = tail_kind_from(str_field(j, "tail"));
    if (t.tail == TailKind::periodic)
        t.tail_endo = Homomorphism(t.stages.back(), t.stages.back(),
                                   matrix_from_json(field(j, "tail_endo")));
    t.validate();
    return t;
}

json nerve_tower_to_json(const NerveTower& t) {
    json complexes = json::array();
    for (const auto& k : t.complexes) complexes.push_back(complex_to_json(k));
    json bonds = json::array();
    for (const auto& b : t.bonds) bonds.push_back(b.vertex_map());
    return json{{"complexes", std::move(complexes)},
                {"bonds", std::move(bonds)},
                {"tail", tail_policy_name(t.tail)}};
}

NerveTower nerve_tower_from_json(const json& j) {
    NerveTower t;
    const json& complexes = field(j, "complexes");
    if (!complexes.is_array() || complexes.empty())
        bad("nerve tower needs a nonempty complexes array");
    for (const auto& k : complexes) t.complexes.push_back(complex_from_json(k));
    const json& bonds = field(j, "bonds");
    if (!bonds.is_array() || bonds.size() + 1 != t.complexes.size())
        bad("nerve tower needs one bond per consecutive stage pair");
    for (std::size_t i = 0; i < bonds.size(); ++i) {
        if (!bonds[i].is_array()) bad("nerve tower bonds must be vertex index arrays");
        std::vector<std::size_t> vmap;
        for (const auto& v : bonds[i]) {
            if (!v.is_number_unsigned()) bad("bond entries must be vertex indices");
            vmap.push_back(v.get<std::size_t>());
        }
        t.bonds.emplace_back(t.complexes[i + 1], t.complexes[i], vmap);
    }
    t.tail = tail_policy_from(str_field(j, "tail"));
    t.validate();
    return t;
}

json analysis_to_json(const TowerAnalysis& a) {
    json limit{{"kind", a.limit.kind == LimResult::Kind::exact ? "exact" : "truncated"},
               {"group", group_to_json(a.limit.group)}};
    if (a.limit.kind == LimResult::Kind::truncated) limit["window"] = a.limit.window;
    return json{{"mittag_leffler", ml_name(a.ml)},
                {"stable_at", a.ml_stable_at},
                {"reason", a.ml_reason},
                {"lim1", lim1_name(a.lim1)},
                {"limit", std::move(limit)}};
}

json colim_to_json(const ColimResult& c) {
    switch (c.kind) {
        case ColimResult::Kind::exact:
            return json{{"kind", "exact"}, {"group", group_to_json(c.group)}};
        case ColimResult::Kind::localized:
            return json{{"kind", "localized"},
                        {"rank", c.local_rank},
                        {"denominator", int_to_json(c.local_denominator)},
                        {"torsion_part", group_to_json(c.torsion_part)}};
        case ColimResult::Kind::truncated:
            return json{{"kind", "truncated"}, {"last_stage", group_to_json(c.group)}};
    }
    bad("unreachable colim kind");
}

json steenrod_to_json(const SteenrodEntry& e) {
    json out{{"degree", e.degree}};
    switch (e.status) {
        case SteenrodEntry::Status::exact:
            out["status"] = "exact";
            out["group"] = group_to_json(e.group);
            break;
        case SteenrodEntry::Status::truncated: out["status"] = "truncated"; break;
        case SteenrodEntry::Status::extension_unresolved:
            out["status"] = "extension_unresolved";
            break;
        case SteenrodEntry::Status::inconclusive: out["status"] = "inconclusive"; break;
    }
    out["lim"] = analysis_to_json(e.lim_term);
    out["lim1"] = analysis_to_json(e.lim1_term);
    return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace nervetower::io

// Acceptance checks. Each criterion prints a single PASS/FAIL line; the
// exit code is the number of failures.
#include "nervetower/homology.hpp"
#include "nervetower/json_io.hpp"
#include "nervetower/mapping_cone.hpp"
#include "nervetower/steenrod.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <sstream>

using namespace nervetower;

namespace {

std::string g_cli;
int g_failures = 0;

void criterion(const char* name, const std::function<bool()>& body) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (") + e.what() + ")";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %s (%.2fs)%s\n", ok ? "PASS" : "FAIL", name, secs, note.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

// ---- shared fixtures ----

std::string gv(std::size_t r, std::size_t c) {
    return "v" + std::to_string(r) + "_" + std::to_string(c);
}

SimplicialComplex grid_surface(std::size_t n, bool flip) {
    auto at = [&](std::size_t r, std::size_t c) {
        if (c == n) return gv(flip ? (n - r % n) % n : r % n, 0);
        return gv(r % n, c);
    };
    std::vector<std::string> vertices;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) vertices.push_back(gv(r, c));
    std::vector<std::vector<std::string>> simplices;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            simplices.push_back({at(r, c), at(r + 1, c), at(r + 1, c + 1)});
            simplices.push_back({at(r, c), at(r, c + 1), at(r + 1, c + 1)});
        }
    return SimplicialComplex(std::move(vertices), simplices);
}

SimplicialComplex projective_plane() {
    std::vector<std::vector<std::string>> tris;
    for (const char* t : {"125", "126", "134", "136", "145", "234", "235", "246", "356", "456"})
        tris.push_back({std::string(1, t[0]), std::string(1, t[1]), std::string(1, t[2])});
    return SimplicialComplex({"1", "2", "3", "4", "5", "6"}, tris);
}

SimplicialComplex random_complex(std::mt19937& rng, std::size_t max_vertices) {
    std::uniform_int_distribution<std::size_t> nv(3, max_vertices);
    std::size_t n = nv(rng);
    std::vector<std::string> vertices;
    for (std::size_t i = 0; i < n; ++i) vertices.push_back(std::to_string(i));
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> count(2, 8);
    std::vector<std::vector<std::string>> simplices;
    int c = count(rng);
    for (int s = 0; s < c; ++s) {
        std::set<std::size_t> vs;
        std::uniform_int_distribution<std::size_t> sz(1, 3);
        std::size_t want = sz(rng);
        while (vs.size() < want) vs.insert(pick(rng));
        std::vector<std::string> names;
        for (auto v : vs) names.push_back(std::to_string(v));
        simplices.push_back(std::move(names));
    }
    return SimplicialComplex(std::move(vertices), simplices);
}

Cover random_cover(std::mt19937& rng, std::size_t max_points, std::size_t max_sets,
                   std::size_t max_size) {
    std::uniform_int_distribution<std::size_t> np(2, max_points), ns(1, max_sets);
    std::size_t points = np(rng), sets = ns(rng);
    std::uniform_int_distribution<std::size_t> pick(0, points - 1);
    std::uniform_int_distribution<std::size_t> sz(1, max_size);
    std::vector<std::vector<std::size_t>> members(sets);
    for (auto& s : members) {
        std::set<std::size_t> chosen;
        std::size_t want = std::min(sz(rng), points);
        while (chosen.size() < want) chosen.insert(pick(rng));
        s.assign(chosen.begin(), chosen.end());
    }
    std::set<std::size_t> covered;
    for (const auto& s : members) covered.insert(s.begin(), s.end());
    std::set<std::size_t> first(members[0].begin(), members[0].end());
    for (std::size_t p = 0; p < points; ++p)
        if (!covered.count(p)) first.insert(p);
    members[0].assign(first.begin(), first.end());
    Cover c;
    c.num_points = points;
    for (std::size_t i = 0; i < members.size(); ++i) {
        c.set_names.push_back("S" + std::to_string(i));
        c.members.push_back(std::move(members[i]));
    }
    return c;
}

std::string run_cli(const std::string& args, int* exit_code = nullptr) {
    std::string cmd = g_cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed");
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    if (exit_code) *exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

// ---- criteria ----

bool snf_against_minor_gcd() {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    for (int trial = 0; trial < 500; ++trial) {
        IntMatrix a = oracles::random_matrix(rng, dim(rng), dim(rng), 9);
        SmithForm s = smith_normal_form(a);
        if (!(s.u * a * s.v == s.d)) return false;
        if (!(s.u * s.uinv == IntMatrix::identity(a.rows()))) return false;
        if (!(s.v * s.vinv == IntMatrix::identity(a.cols()))) return false;
        Int prod = 1;
        for (std::size_t k = 1; k <= s.rank; ++k) {
            prod *= s.d(k - 1, k - 1);
            if (prod != oracles::minor_gcd(a, k)) return false;
        }
        if (oracles::minor_gcd(a, s.rank + 1) != 0) return false;
    }
    return true;
}

bool classical_tables() {
    SimplicialComplex rp2 = projective_plane();
    if (homology(rp2, 0) != FGAbelianGroup::free(1)) return false;
    if (homology(rp2, 1) != FGAbelianGroup::cyclic(2)) return false;
    if (!homology(rp2, 2).is_trivial()) return false;
    SimplicialComplex torus = grid_surface(4, false);
    if (homology(torus, 0) != FGAbelianGroup::free(1)) return false;
    if (homology(torus, 1) != FGAbelianGroup::free(2)) return false;
    if (homology(torus, 2) != FGAbelianGroup::free(1)) return false;
    SimplicialComplex klein = grid_surface(4, true);
    if (homology(klein, 0) != FGAbelianGroup::free(1)) return false;
    if (homology(klein, 1) != FGAbelianGroup(1, {Int(2)})) return false;
    if (!homology(klein, 2).is_trivial()) return false;
    if (homology(klein, 2, 2) != FGAbelianGroup::cyclic(2)) return false;
    return true;
}

bool circle_cover_tower() {
    std::vector<Rat> carrier = circle_tower_carrier(5);
    std::vector<Cover> covers;
    std::vector<SimplicialComplex> nerves;
    for (std::size_t m = 1; m <= 5; ++m) {
        covers.push_back(circle_cover(carrier, m));
        nerves.push_back(cech_nerve(covers.back()));
        const SimplicialComplex& n = nerves.back();
        if (n.num_vertices() != 4 * m || n.dimension() != 1 || n.num_simplices(1) != 4 * m)
            return false;
        if (homology(n, 1) != FGAbelianGroup::free(1)) return false;
    }
    for (std::size_t m = 1; m < 5; ++m) {
        SimplicialMap proj =
            refinement_projection(covers[m], covers[m - 1], nerves[m], nerves[m - 1]);
        if (!induced_hom(proj, 1).is_isomorphism()) return false;
    }
    return true;
}

bool dowker_duality() {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 200; ++trial) {
        Cover c = random_cover(rng, 12, 6, 7);
        SimplicialComplex nerve = cech_nerve(c, 8);
        SimplicialComplex viet = vietoris_nerve(c, 8);
        if (homology_tables(nerve, 6, {Int(0), Int(2)}) !=
            homology_tables(viet, 6, {Int(0), Int(2)}))
            return false;
    }
    return true;
}

bool cofiber_les(int wanted) {
    std::mt19937 rng(424242);
    int done = 0;
    for (int attempt = 0; attempt < 20000 && done < wanted; ++attempt) {
        SimplicialComplex l = random_complex(rng, 6);
        SimplicialComplex k = random_complex(rng, 8);
        std::uniform_int_distribution<std::size_t> pick(0, l.num_vertices() - 1);
        std::vector<std::size_t> vmap(k.num_vertices());
        for (auto& v : vmap) v = pick(rng);
        std::optional<SimplicialMap> f;
        try {
            f.emplace(k, l, vmap);
        } catch (const ValidationError&) {
            continue;
        }
        MappingCone mc = mapping_cone(*f);
        int top = mc.complex.dimension() + 1;
        for (long p : {0L, 2L}) {
            for (int n = 0; n <= top; ++n) {
                Homomorphism fn = induced_hom(*f, n, p, true);
                Homomorphism in = induced_hom(mc.target_inclusion, n, p, true);
                if (!in.compose(fn).is_zero()) return false;
                std::size_t cone_dim, coker_dim, ker_dim;
                if (p == 0) {
                    cone_dim = homology(mc.complex, n, 0, true).free_rank;
                    coker_dim = hom_cokernel(fn).free_rank;
                    ker_dim = n == 0 ? 0 : hom_kernel(induced_hom(*f, n - 1, 0, true)).free_rank;
                } else {
                    cone_dim = homology(mc.complex, n, p, true).torsion.size();
                    coker_dim = hom_cokernel(fn).torsion.size();
                    ker_dim =
                        n == 0 ? 0 : hom_kernel(induced_hom(*f, n - 1, p, true)).torsion.size();
                }
                if (cone_dim != coker_dim + ker_dim) return false;
            }
        }
        ++done;
    }
    return done == wanted;
}

bool solenoid_milnor() {
    for (int p : {2, 3, 5}) {
        NerveTower t = builtin_space("solenoid", {Int(p), Int(5)});
        SteenrodEntry e1 = steenrod_homology(t, 1);
        if (e1.status != SteenrodEntry::Status::exact || !e1.group.is_trivial()) return false;
        SteenrodEntry e0 = steenrod_homology(t, 0);
        if (e0.status != SteenrodEntry::Status::extension_unresolved) return false;
        if (e0.lim1_term.lim1 != Lim1Class::nonzero_uncountable) return false;
        ColimResult c1 = cech_cohomology(t, 1);
        if (c1.kind != ColimResult::Kind::localized || c1.local_rank != 1 ||
            c1.local_denominator != p || !c1.torsion_part.is_trivial())
            return false;
    }
    return true;
}

bool movable_collapse() {
    // movable presentations: every lim^1 vanishes, Steenrod = limit data
    NerveTower circle = builtin_space("circle_constant", {Int(4)});
    if (!movability_proxy(circle, 2)) return false;
    SteenrodEntry e1 = steenrod_homology(circle, 1);
    if (e1.status != SteenrodEntry::Status::exact || e1.group != FGAbelianGroup::free(1))
        return false;

    NerveTower cantor = builtin_space("cantor", {Int(5)});
    if (!movability_proxy(cantor, 2)) return false;
    for (int n = 0; n <= 2; ++n) {
        SteenrodEntry e = steenrod_homology(cantor, n);
        // lim^1 always vanishes, so the entry is exactly the homology
        // tower's limit data
        if (e.lim1_term.lim1 != Lim1Class::zero) return false;
        if (e.status == SteenrodEntry::Status::extension_unresolved ||
            e.status == SteenrodEntry::Status::inconclusive)
            return false;
        TowerAnalysis direct = analyze_tower(homology_tower(cantor, n), 8);
        if (e.lim_term.limit.kind != direct.limit.kind) return false;
        if (e.lim_term.limit.group != direct.limit.group) return false;
    }

    // finite-coefficient towers of the solenoids are Mittag-Leffler
    for (int p : {2, 3}) {
        NerveTower t = builtin_space("solenoid", {Int(p), Int(4)});
        for (const Int& m : {Int(p), Int(p * p), Int(6)}) {
            TowerAnalysis a = analyze_tower(homology_tower(t, 1, m), 8);
            if (a.lim1 != Lim1Class::zero) return false;
        }
    }
    return true;
}

std::vector<Int> apply_elem(const Homomorphism& h, const std::vector<Int>& x) {
    std::vector<Int> y(h.target.num_generators(), 0);
    for (std::size_t i = 0; i < y.size(); ++i) {
        for (std::size_t j = 0; j < x.size(); ++j) y[i] += h.matrix(i, j) * x[j];
        y[i] = pos_mod(y[i], h.target.generator_order(i));
    }
    return y;
}

bool tower_oracle_equivalence() {
    std::mt19937 rng(97);
    std::vector<FGAbelianGroup> groups = {
        FGAbelianGroup::cyclic(2),           FGAbelianGroup::cyclic(8),
        FGAbelianGroup::cyclic(32),          FGAbelianGroup(0, {Int(2), Int(4)}),
        FGAbelianGroup(0, {Int(2), Int(2), Int(4)}), FGAbelianGroup(0, {Int(3), Int(9)}),
        FGAbelianGroup(0, {Int(5), Int(5)}),
    };
    int done = 0;
    for (int trial = 0; trial < 3000 && done < 200; ++trial) {
        const auto& g = groups[trial % groups.size()];
        IntMatrix m = oracles::random_matrix(rng, g.num_generators(), g.num_generators(), 6);
        Homomorphism f(g, g, m, false);
        if (!f.respects_relations()) continue;
        ++done;
        std::uniform_int_distribution<std::size_t> dd(1, 6);
        GroupTower t;
        std::size_t depth = dd(rng);
        for (std::size_t i = 0; i < depth; ++i) t.stages.push_back(g);
        for (std::size_t i = 0; i + 1 < depth; ++i) t.bonds.push_back(f);
        t.tail = TailKind::periodic;
        t.tail_endo = f;
        TowerAnalysis a = analyze_tower(t);
        if (a.ml != MLStatus::holds || a.lim1 != Lim1Class::zero) return false;
        if (a.limit.kind != LimResult::Kind::exact) return false;
        // brute-force eventual image over all elements
        std::set<std::vector<Int>> cur;
        for (const auto& e : oracles::enumerate_elements(g)) cur.insert(e);
        for (;;) {
            std::set<std::vector<Int>> next;
            for (const auto& e : cur) next.insert(apply_elem(f, e));
            if (next == cur) break;
            cur = std::move(next);
        }
        if (a.limit.group.order() != Int(cur.size())) return false;
    }
    return done == 200;
}

bool cli_determinism_roundtrip() {
    int code = 0;
    std::string a = run_cli("steenrod --space solenoid --params 2 5 --deg 1", &code);
    if (code != 0) return false;
    std::string b = run_cli("steenrod --space solenoid --params 2 5 --deg 1", &code);
    if (code != 0 || a != b) return false;

    std::string emitted = run_cli("spaces --name cantor --params 4", &code);
    if (code != 0) return false;
    NerveTower back = io::nerve_tower_from_json(io::json::parse(emitted));
    if (io::dump(io::nerve_tower_to_json(back)) != emitted) return false;

    // strict mode flags inconclusive towers with exit code 3
    GroupTower open_ended;
    open_ended.stages = {FGAbelianGroup::free(1)};
    std::ostringstream cmd;
    std::string path = "/tmp/nt_acceptance_tower.json";
    {
        std::string text = io::dump(io::group_tower_to_json(open_ended));
        FILE* out = std::fopen(path.c_str(), "w");
        if (!out) return false;
        std::fwrite(text.data(), 1, text.size(), out);
        std::fclose(out);
    }
    run_cli("tower --in " + path + " --strict", &code);
    return code == 3;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: acceptance <path-to-cli>\n");
        return 64;
    }
    g_cli = argv[1];
    criterion("smith-normal-form-vs-minor-gcd-oracle", snf_against_minor_gcd);
    criterion("classical-surface-homology-tables", classical_tables);
    criterion("circle-arc-cover-tower", circle_cover_tower);
    criterion("dowker-duality-random-covers", dowker_duality);
    criterion("cofiber-sequence-bookkeeping", [] { return cofiber_les(100); });
    criterion("solenoid-milnor-sequence", solenoid_milnor);
    criterion("movable-towers-collapse", movable_collapse);
    criterion("tower-enumeration-oracle", tower_oracle_equivalence);
    criterion("cli-determinism-and-json-roundtrip", cli_determinism_roundtrip);
    return g_failures;
}

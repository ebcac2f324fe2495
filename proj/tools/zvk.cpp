// Command line front end: builds Zariski-van Kampen presentations from
// braid monodromy files, simplifies them, and computes the invariants used
// to tell the two bundled sextic complements apart.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "zvk/alexander.hpp"
#include "zvk/finite_group.hpp"
#include "zvk/fixtures.hpp"
#include "zvk/json_io.hpp"
#include "zvk/lattice.hpp"
#include "zvk/orbits.hpp"
#include "zvk/snf.hpp"

using namespace zvk;

namespace {

struct Report {
    Json j = Json::object();
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    Report(const std::string& command) {
        j["command"] = command;
        j["fitting_offset"] = kFittingOffset;
    }
    void emit() {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        j["wall_ms"] = ms;
        std::cerr << j.dump() << "\n";
    }
};

std::optional<std::string> fixture_override(const std::string& name) {
    const char* dir = std::getenv("ZVK_FIXTURES");
    if (!dir) return std::nullopt;
    std::filesystem::path p = std::filesystem::path(dir) / (name + ".json");
    if (std::filesystem::exists(p)) return p.string();
    return std::nullopt;
}

MonodromyPresentation resolve_monodromy(const std::string& arg) {
    if (std::filesystem::exists(arg)) return load_monodromy(arg);
    if (auto p = fixture_override(arg)) return load_monodromy(*p);
    if (arg == "c1_special") return fixtures::c1_special();
    if (arg == "c2_special") return fixtures::c2_special();
    if (arg == "generic_common") return fixtures::generic_common();
    if (arg == "c2_a15_refinement") return fixtures::c2_a15_refinement();
    throw SchemaError("no such monodromy file or bundled fixture: " + arg);
}

GroupPresentation resolve_presentation(const std::string& arg) {
    if (std::filesystem::exists(arg)) return load_presentation(arg);
    if (auto p = fixture_override(arg)) return load_presentation(*p);
    if (arg == "g1_paper") return fixtures::g1_paper();
    if (arg == "g2_paper") return fixtures::g2_paper();
    throw SchemaError("no such presentation file or bundled fixture: " + arg);
}

AbelianLabel resolve_label(const std::string& arg, const GroupPresentation& p) {
    if (std::filesystem::exists(arg)) return label_from_json(load_json_file(arg), p);
    if (arg == "meridians" || arg == "auto") return fixtures::label_for_names(p.names);
    throw SchemaError("no such label file: " + arg);
}

Json points_json(const std::vector<CharacterPoint>& pts) {
    Json arr = Json::array();
    for (const CharacterPoint& p : pts) arr.push_back(point_to_json(p));
    return arr;
}

std::vector<CharacterPoint> char1_of(const GroupPresentation& p, const AbelianLabel& lab,
                                     int k, int order, int jobs) {
    GroupPresentation c = centralize_incompatible_relators(p, lab);
    PolyMatrix m = alexander_matrix(c, lab);
    return charvar_points(fitting_ideal(m, k), lab.vars, order, jobs);
}

struct PipelineResult {
    GroupPresentation simplified;
    AbelianLabel label;
    std::vector<CharacterPoint> char1;
};

PipelineResult run_pipeline(const MonodromyPresentation& mp, int order, int jobs, long budget) {
    GroupPresentation p = zvk_presentation(mp);
    if (mp.infinity_word) p = projectivize(p, *mp.infinity_word);
    TietzeResult simp = tietze_simplify(p, budget);
    PipelineResult r;
    r.simplified = simp.presentation;
    r.label = fixtures::label_for_names(simp.presentation.names);
    r.char1 = char1_of(r.simplified, r.label, 1, order, jobs);
    return r;
}

int run(int argc, char** argv) {
    CLI::App app{"braid monodromy, fundamental group and characteristic variety toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // accept --jobs after the subcommand name
    int jobs = 1;
    app.add_option("--jobs", jobs, "worker threads for scans and counts");

    // present
    auto* present = app.add_subcommand("present", "Zariski-van Kampen presentation of a monodromy");
    std::string present_in;
    bool present_proj = false;
    std::string labels_out;
    present->add_option("monodromy", present_in)->required();
    present->add_flag("--projective", present_proj, "append the meridian-at-infinity relator");
    present->add_option("--labels-out", labels_out, "write the component labels of the generators");

    // simplify
    auto* simplify = app.add_subcommand("simplify", "Tietze simplification of a presentation");
    std::string simplify_in;
    long budget = 100000;
    simplify->add_option("presentation", simplify_in)->required();
    simplify->add_option("--budget", budget, "maximum number of elementary moves");

    // abelianize
    auto* abel = app.add_subcommand("abelianize", "invariant factors of the abelianization");
    std::string abel_in;
    abel->add_option("presentation", abel_in)->required();

    // homcount
    auto* hom = app.add_subcommand("homcount", "homomorphism-count fingerprint");
    std::string hom_in;
    int max_order = 16;
    hom->add_option("presentation", hom_in)->required();
    hom->add_option("--max-order", max_order, "largest catalog group order");

    // charvar
    auto* charv = app.add_subcommand("charvar", "torsion points of a characteristic variety");
    std::string charv_in, charv_labels = "auto";
    int charv_k = 1, charv_order = 24;
    charv->add_option("presentation", charv_in)->required();
    charv->add_option("--labels", charv_labels, "label file (name -> component)");
    charv->add_option("-k", charv_k, "depth");
    charv->add_option("--order", charv_order, "scan order N");

    // alexpoly
    auto* alex = app.add_subcommand("alexpoly", "one-variable specialization of the first ideal");
    std::string alex_in, alex_labels = "auto";
    alex->add_option("presentation", alex_in)->required();
    alex->add_option("--labels", alex_labels, "label file (name -> component)");

    // braid eq
    auto* braid = app.add_subcommand("braid", "braid word utilities");
    auto* braid_eq = braid->add_subcommand("eq", "decide equality of two braid words");
    std::string b1, b2;
    braid_eq->add_option("first", b1)->required();
    braid_eq->add_option("second", b2)->required();

    // deform-solve
    auto* deform = app.add_subcommand("deform-solve", "twist exponents compatible with the"
                                                      " tangency deformation");
    std::string range = "0..8";
    deform->add_option("--range", range, "inclusive range a..b");

    // orbits
    app.add_subcommand("orbits", "torsion exponent orbits of the nodal cubic parametrization");

    // lattice
    auto* lattice = app.add_subcommand("lattice", "lattice discriminant utilities");
    auto* lat_disc = lattice->add_subcommand("disc", "discriminant of a Gram lattice");
    std::string lat_in;
    lat_disc->add_option("spec", lat_in)->required();
    auto* lat_obs = lattice->add_subcommand("obstruct", "torsion obstruction verdict");
    long long disc_t = 0, disc_ns = 0;
    int tor_n = 1;
    lat_obs->add_option("--disc-t", disc_t)->required();
    lat_obs->add_option("--disc-ns", disc_ns)->required();
    lat_obs->add_option("-n", tor_n)->required();

    // zariski-pair
    auto* pair = app.add_subcommand("zariski-pair", "full pipeline on both bundled sextics");
    int pair_order = 24;
    long pair_budget = 100000;
    pair->add_option("--order", pair_order, "scan order N");
    pair->add_option("--budget", pair_budget, "simplification budget");

    // dump-fixtures
    auto* dump = app.add_subcommand("dump-fixtures", "write the bundled fixtures as JSON files");
    std::string dump_dir = ".";
    dump->add_option("dir", dump_dir);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    if (present->parsed()) {
        Report rep("present");
        MonodromyPresentation mp = resolve_monodromy(present_in);
        GroupPresentation p = zvk_presentation(mp);
        if (present_proj) {
            if (!mp.infinity_word) throw SchemaError("monodromy has no infinity word");
            p = projectivize(p, *mp.infinity_word);
        }
        if (!labels_out.empty()) {
            AbelianLabel lab;
            lab.vars = 0;
            std::map<std::string, int> comp_index;
            for (const auto& [i, c] : mp.component_of)
                if (!comp_index.count(c)) {
                    comp_index[c] = static_cast<int>(comp_index.size()) + 1;
                    ++lab.vars;
                }
            for (int i = 1; i <= mp.strands; ++i) lab.component.push_back(comp_index[mp.component_of.at(i)]);
            store_json_file(label_to_json(lab, p.names), labels_out);
        }
        std::cout << presentation_to_json(p).dump(2) << "\n";
        rep.emit();
        return 0;
    }
    if (simplify->parsed()) {
        Report rep("simplify");
        TietzeResult r = tietze_simplify(resolve_presentation(simplify_in), budget);
        rep.j["steps"] = r.steps;
        std::cout << presentation_to_json(r.presentation).dump(2) << "\n";
        rep.emit();
        return 0;
    }
    if (abel->parsed()) {
        Report rep("abelianize");
        AbelianInvariants inv = abelianization(resolve_presentation(abel_in));
        Json t = Json::array();
        for (const mpz_class& d : inv.torsion) t.push_back(d.get_str());
        std::cout << Json{{"free_rank", inv.free_rank}, {"torsion", t}}.dump(2) << "\n";
        rep.emit();
        return 0;
    }
    if (hom->parsed()) {
        Report rep("homcount");
        GroupPresentation p = resolve_presentation(hom_in);
        Json out = Json::object();
        std::map<std::string, std::uint64_t> counts;
        for (const FiniteGroup& g : catalog(max_order)) counts[g.label] = hom_count(p, g, jobs);
        for (const auto& [label, c] : counts) out[label] = c;
        rep.j["max_order"] = max_order;
        std::cout << out.dump(2) << "\n";
        rep.emit();
        return 0;
    }
    if (charv->parsed()) {
        Report rep("charvar");
        GroupPresentation p = resolve_presentation(charv_in);
        AbelianLabel lab = resolve_label(charv_labels, p);
        std::vector<CharacterPoint> pts = char1_of(p, lab, charv_k, charv_order, jobs);
        rep.j["scan_order"] = charv_order;
        rep.j["k"] = charv_k;
        std::cout << Json{{"k", charv_k}, {"order", charv_order}, {"points", points_json(pts)}}.dump(2)
                  << "\n";
        rep.emit();
        return 0;
    }
    if (alex->parsed()) {
        Report rep("alexpoly");
        GroupPresentation p = resolve_presentation(alex_in);
        AbelianLabel lab = resolve_label(alex_labels, p);
        GroupPresentation c = centralize_incompatible_relators(p, lab);
        DensePoly poly = alexander_polynomial(fitting_ideal(alexander_matrix(c, lab), 1));
        std::cout << dense_to_string(poly) << "\n";
        rep.emit();
        return 0;
    }
    if (braid_eq->parsed()) {
        Report rep("braid eq");
        BraidWord w1 = braid_from_json(load_json_file(b1), b1);
        BraidWord w2 = braid_from_json(load_json_file(b2), b2);
        bool eq = braids_equal(w1, w2);
        std::cout << (eq ? "true" : "false") << "\n";
        rep.emit();
        return eq ? 0 : 1;
    }
    if (deform->parsed()) {
        Report rep("deform-solve");
        auto dots = range.find("..");
        if (dots == std::string::npos) throw SchemaError("range must be of the form a..b");
        int lo = std::stoi(range.substr(0, dots));
        int hi = std::stoi(range.substr(dots + 2));
        Json out = Json::array();
        for (int k : solve_deformation_exponent(lo, hi)) out.push_back(k);
        std::cout << Json{{"solutions", out}}.dump(2) << "\n";
        rep.emit();
        return 0;
    }
    if (app.get_subcommand("orbits")->parsed()) {
        Report rep("orbits");
        ExponentOrbit orb = cubic_orbit_classes();
        Json cls = Json::array();
        for (const auto& c : orb.classes) cls.push_back(c);
        std::cout << Json{{"modulus", orb.modulus}, {"classes", cls}}.dump(2) << "\n";
        rep.emit();
        return 0;
    }
    if (lat_disc->parsed()) {
        Report rep("lattice disc");
        GramLattice l = lattice_from_spec_json(load_json_file(lat_in));
        std::cout << Json{{"disc", disc(l).get_str()}}.dump(2) << "\n";
        rep.emit();
        return 0;
    }
    if (lat_obs->parsed()) {
        Report rep("lattice obstruct");
        Obstruction o = torsion_obstruction(mpz_class(static_cast<long>(disc_t)),
                                            mpz_class(static_cast<long>(disc_ns)), tor_n);
        std::cout << Json{{"verdict", to_string(o)}}.dump(2) << "\n";
        rep.emit();
        return 0;
    }
    if (pair->parsed()) {
        Report rep("zariski-pair");
        PipelineResult r1 = run_pipeline(fixtures::c1_special(), pair_order, jobs, pair_budget);
        PipelineResult r2 = run_pipeline(fixtures::c2_special(), pair_order, jobs, pair_budget);
        bool distinct = r1.char1 != r2.char1;
        Json out;
        out["curve1"] = Json{{"label", "c1_special"}, {"char1", points_json(r1.char1)}};
        out["curve2"] = Json{{"label", "c2_special"}, {"char1", points_json(r2.char1)}};
        out["scan_order"] = pair_order;
        out["verdict"] = distinct ? "DISTINCT" : "INDISTINGUISHABLE";
        std::cout << out.dump(2) << "\n";
        rep.emit();
        return distinct ? 0 : 1;
    }
    if (dump->parsed()) {
        Report rep("dump-fixtures");
        std::filesystem::create_directories(dump_dir);
        auto path = [&](const std::string& n) {
            return (std::filesystem::path(dump_dir) / (n + ".json")).string();
        };
        store_monodromy(fixtures::c1_special(), path("c1_special"));
        store_monodromy(fixtures::c2_special(), path("c2_special"));
        store_monodromy(fixtures::generic_common(), path("generic_common"));
        store_monodromy(fixtures::c2_a15_refinement(), path("c2_a15_refinement"));
        store_presentation(fixtures::g1_paper(), path("g1_paper"));
        store_presentation(fixtures::g2_paper(), path("g2_paper"));
        store_json_file(label_to_json(fixtures::two_generator_label(), {"a", "b"}),
                        path("labels_ab"));
        store_json_file(label_to_json(fixtures::meridian_label(), {"a1", "a2", "a3", "a4"}),
                        path("labels_meridians"));
        store_json_file(Json{{"summands",
                              Json::array({Json{{"type", "scalar"}, {"value", 2}},
                                           Json{{"type", "A"}, {"k", 15}},
                                           Json{{"type", "A"}, {"k", 3}},
                                           Json{{"type", "A"}, {"k", 1}}})}},
                        path("disc_fixture"));
        store_json_file(lattice_spec_to_json(fixtures::c2_gram()), path("c2_gram"));
        rep.emit();
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const SchemaError& e) {
        std::cerr << Json{{"error", e.what()}}.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << Json{{"error", e.what()}}.dump() << "\n";
        return 2;
    }
}

#include "zvk/json_io.hpp"

#include <fstream>

namespace zvk {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw SchemaError(where + ": " + what);
}

int require_int(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) fail(where, "expected an integer");
    return j.get<int>();
}

}  // namespace

Json word_to_json(const Word& w) { return Json(w.letters()); }

Word word_from_json(const Json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array of nonzero integers");
    std::vector<int> letters;
    for (std::size_t i = 0; i < j.size(); ++i) {
        int v = require_int(j[i], where + "[" + std::to_string(i) + "]");
        if (v == 0) fail(where + "[" + std::to_string(i) + "]", "letter must be nonzero");
        letters.push_back(v);
    }
    return Word(letters);
}

Json braid_to_json(const BraidWord& b) {
    return Json{{"strands", b.strands}, {"letters", b.letters}};
}

BraidWord braid_from_json(const Json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("strands") || !j.contains("letters"))
        fail(where, "expected {\"strands\":n, \"letters\":[...]}");
    int strands = require_int(j["strands"], where + ".strands");
    if (!j["letters"].is_array()) fail(where + ".letters", "expected an array");
    std::vector<int> letters;
    for (std::size_t i = 0; i < j["letters"].size(); ++i) {
        std::string at = where + ".letters[" + std::to_string(i) + "]";
        int v = require_int(j["letters"][i], at);
        if (v == 0 || std::abs(v) >= strands)
            fail(at, "letter " + std::to_string(v) + " out of range for " +
                     std::to_string(strands) + " strands");
        letters.push_back(v);
    }
    try {
        return BraidWord(strands, std::move(letters));
    } catch (const std::exception& e) {
        fail(where, e.what());
    }
}

Json monodromy_to_json(const MonodromyPresentation& mp) {
    Json j;
    j["strands"] = mp.strands;
    Json comp = Json::object();
    for (const auto& [i, c] : mp.component_of) comp[std::to_string(i)] = c;
    j["component_of"] = comp;
    Json braids = Json::array();
    for (const BraidWord& b : mp.braids) braids.push_back(braid_to_json(b));
    j["braids"] = braids;
    if (mp.infinity_word) j["infinity_word"] = word_to_json(*mp.infinity_word);
    j["label"] = mp.label;
    j["partial"] = mp.partial;
    return j;
}

MonodromyPresentation monodromy_from_json(const Json& j) {
    if (!j.is_object()) fail("monodromy", "expected an object");
    MonodromyPresentation mp;
    if (!j.contains("strands")) fail("monodromy", "missing field strands");
    mp.strands = require_int(j["strands"], "monodromy.strands");
    if (!j.contains("braids") || !j["braids"].is_array())
        fail("monodromy.braids", "expected an array");
    for (std::size_t i = 0; i < j["braids"].size(); ++i) {
        BraidWord b = braid_from_json(j["braids"][i], "monodromy.braids[" + std::to_string(i) + "]");
        if (b.strands != mp.strands)
            fail("monodromy.braids[" + std::to_string(i) + "]",
                 "strand count differs from monodromy strand count");
        mp.braids.push_back(std::move(b));
    }
    if (!j.contains("component_of") || !j["component_of"].is_object())
        fail("monodromy.component_of", "expected an object");
    for (const auto& [key, val] : j["component_of"].items()) {
        int idx = 0;
        try {
            idx = std::stoi(key);
        } catch (...) {
            fail("monodromy.component_of", "key '" + key + "' is not a meridian index");
        }
        if (!val.is_string()) fail("monodromy.component_of." + key, "expected a string");
        mp.component_of[idx] = val.get<std::string>();
    }
    if (j.contains("infinity_word"))
        mp.infinity_word = word_from_json(j["infinity_word"], "monodromy.infinity_word");
    if (j.contains("label")) mp.label = j["label"].get<std::string>();
    if (j.contains("partial")) mp.partial = j["partial"].get<bool>();
    try {
        mp.validate();
    } catch (const std::exception& e) {
        fail("monodromy", e.what());
    }
    return mp;
}

Json presentation_to_json(const GroupPresentation& p) {
    Json j;
    j["rank"] = p.rank;
    j["names"] = p.names;
    Json rels = Json::array();
    for (const Word& r : p.relators) rels.push_back(word_to_json(r));
    j["relators"] = rels;
    return j;
}

GroupPresentation presentation_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rank")) fail("presentation", "missing field rank");
    int rank = require_int(j["rank"], "presentation.rank");
    std::vector<std::string> names;
    if (j.contains("names")) {
        if (!j["names"].is_array()) fail("presentation.names", "expected an array");
        for (const auto& n : j["names"]) names.push_back(n.get<std::string>());
        if (!names.empty() && static_cast<int>(names.size()) != rank)
            fail("presentation.names", "name count differs from rank");
    }
    std::vector<Word> rels;
    if (j.contains("relators")) {
        if (!j["relators"].is_array()) fail("presentation.relators", "expected an array");
        for (std::size_t i = 0; i < j["relators"].size(); ++i) {
            Word w = word_from_json(j["relators"][i],
                                    "presentation.relators[" + std::to_string(i) + "]");
            if (w.max_index() > rank)
                fail("presentation.relators[" + std::to_string(i) + "]",
                     "generator index exceeds rank");
            rels.push_back(w);
        }
    }
    return make_presentation(rank, std::move(names), rels);
}

Json label_to_json(const AbelianLabel& lab, const std::vector<std::string>& names) {
    Json m = Json::object();
    for (std::size_t i = 0; i < lab.component.size(); ++i) {
        std::string key = i < names.size() ? names[i] : "g" + std::to_string(i + 1);
        m[key] = lab.component[i];
    }
    return Json{{"vars", lab.vars}, {"labels", m}};
}

AbelianLabel label_from_json(const Json& j, const GroupPresentation& p) {
    if (!j.is_object() || !j.contains("vars") || !j.contains("labels"))
        fail("labels", "expected {\"vars\":r, \"labels\":{name:component}}");
    AbelianLabel lab;
    lab.vars = require_int(j["vars"], "labels.vars");
    for (int i = 0; i < p.rank; ++i) {
        std::string key = !p.names.empty() ? p.names[i] : "g" + std::to_string(i + 1);
        if (!j["labels"].contains(key)) fail("labels", "missing component for generator " + key);
        lab.component.push_back(require_int(j["labels"][key], "labels." + key));
    }
    try {
        lab.validate(p.rank);
    } catch (const std::exception& e) {
        fail("labels", e.what());
    }
    return lab;
}

Json laurent_to_json(const LaurentPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        terms.push_back(Json{{"exp", e}, {"coef", c.get_str()}});
    }
    return Json{{"vars", p.vars()}, {"terms", terms}};
}

LaurentPoly laurent_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vars")) fail("laurent", "missing field vars");
    LaurentPoly p(require_int(j["vars"], "laurent.vars"));
    if (j.contains("terms")) {
        for (const auto& t : j["terms"]) {
            std::vector<int> e = t["exp"].get<std::vector<int>>();
            mpz_class c;
            if (t["coef"].is_string())
                c = mpz_class(t["coef"].get<std::string>());
            else
                c = mpz_class(static_cast<long>(t["coef"].get<long long>()));
            p.add_term(e, c);
        }
    }
    return p;
}

Json point_to_json(const CharacterPoint& pt) {
    Json q = Json::array();
    for (const mpq_class& x : pt.q)
        q.push_back(x.get_num().get_str() + "/" + x.get_den().get_str());
    return Json{{"q", q}};
}

CharacterPoint point_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("q")) fail("point", "missing field q");
    std::vector<mpq_class> q;
    for (const auto& s : j["q"]) {
        mpq_class x(s.get<std::string>());
        x.canonicalize();
        q.push_back(x);
    }
    return CharacterPoint(q);
}

Json lattice_spec_to_json(const GramLattice& l) {
    Json rows = Json::array();
    for (const auto& r : l.gram) rows.push_back(r);
    return Json{{"gram", rows}};
}

GramLattice lattice_from_spec_json(const Json& j) {
    if (j.contains("summands")) {
        std::vector<GramLattice> parts;
        for (const auto& s : j["summands"]) {
            if (!s.contains("type")) fail("lattice.summands", "missing type");
            std::string type = s["type"].get<std::string>();
            if (type == "scalar")
                parts.push_back(scalar_lattice(s["value"].get<long long>()));
            else if (type == "A")
                parts.push_back(a_chain_lattice(s["k"].get<int>()));
            else
                fail("lattice.summands", "unknown summand type " + type);
        }
        return direct_sum(parts);
    }
    if (j.contains("gram")) {
        GramLattice l;
        for (const auto& row : j["gram"]) l.gram.push_back(row.get<std::vector<long long>>());
        try {
            l.validate();
        } catch (const std::exception& e) {
            fail("lattice.gram", e.what());
        }
        return l;
    }
    fail("lattice", "expected summands or gram");
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw SchemaError(path + ": " + e.what());
    }
    return j;
}

void store_json_file(const Json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw SchemaError("cannot open " + path + " for writing");
    out << j.dump(2) << "\n";
}

MonodromyPresentation load_monodromy(const std::string& path) {
    return monodromy_from_json(load_json_file(path));
}

void store_monodromy(const MonodromyPresentation& mp, const std::string& path) {
    store_json_file(monodromy_to_json(mp), path);
}

GroupPresentation load_presentation(const std::string& path) {
    return presentation_from_json(load_json_file(path));
}

void store_presentation(const GroupPresentation& p, const std::string& path) {
    store_json_file(presentation_to_json(p), path);
}

}  // namespace zvk

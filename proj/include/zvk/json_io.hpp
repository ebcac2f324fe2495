#ifndef ZVK_JSON_IO_HPP
#define ZVK_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "zvk/alexander.hpp"
#include "zvk/lattice.hpp"
#include "zvk/monodromy.hpp"
#include "zvk/presentation.hpp"

namespace zvk {

using Json = nlohmann::ordered_json;

// Raised for malformed input files; the CLI turns it into a JSON error
// object and exit code 2.
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json word_to_json(const Word& w);
Word word_from_json(const Json& j, const std::string& where);

Json braid_to_json(const BraidWord& b);
BraidWord braid_from_json(const Json& j, const std::string& where);

Json monodromy_to_json(const MonodromyPresentation& mp);
MonodromyPresentation monodromy_from_json(const Json& j);

Json presentation_to_json(const GroupPresentation& p);
GroupPresentation presentation_from_json(const Json& j);

Json label_to_json(const AbelianLabel& lab, const std::vector<std::string>& names);
AbelianLabel label_from_json(const Json& j, const GroupPresentation& p);

Json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

Json point_to_json(const CharacterPoint& pt);
CharacterPoint point_from_json(const Json& j);

Json lattice_spec_to_json(const GramLattice& l);          // as a raw Gram matrix
GramLattice lattice_from_spec_json(const Json& j);        // summand list or raw matrix

MonodromyPresentation load_monodromy(const std::string& path);
void store_monodromy(const MonodromyPresentation& mp, const std::string& path);

GroupPresentation load_presentation(const std::string& path);
void store_presentation(const GroupPresentation& p, const std::string& path);

Json load_json_file(const std::string& path);
void store_json_file(const Json& j, const std::string& path);

}  // namespace zvk

#endif

#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "superber/berezin.hpp"
#include "superber/canonical.hpp"
#include "superber/grassmann.hpp"
#include "superber/supermatrix.hpp"
#include "superber/supertensor.hpp"

namespace superber {

using Json = nlohmann::ordered_json;

/* Structured forms. All serialization is deterministic: grassmann terms
   in monomial order (length, then lexicographic), matrix entries in
   grid order, tensor words lexicographic. */
Json grassmann_to_json(const GrassmannElement& a);
GrassmannElement grassmann_from_json(const Json& j, int num_generators);

Json supermatrix_to_json(const SuperMatrix& a);
SuperMatrix supermatrix_from_json(const Json& j);

Json supertensor_to_json(const SuperTensor& t);
SuperTensor supertensor_from_json(const Json& j, int num_generators);

Json check_report_to_json(const CheckReport& r);

/* One canonical pair as a table row; set with_tensors to embed the
   basis tensors and their normalized duals. */
Json canonical_pair_to_json(const CanonicalPair& p, bool with_tensors);

/* Fixed-width text table over all pairs. */
std::string canon_table_text(const std::vector<CanonicalPair>& pairs);

Json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

} // namespace superber

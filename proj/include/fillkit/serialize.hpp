#pragma once

// JSON forms of the library values. Integers that fit in 64 bits are JSON
// numbers and larger ones are decimal strings; both are accepted on input.

#include "fillkit/braid.hpp"
#include "fillkit/factorization.hpp"
#include "fillkit/intlinalg.hpp"
#include "fillkit/presentations.hpp"

#include "json.hpp"

namespace fillkit::io {

using json = nlohmann::ordered_json;

json to_json(const Integer& v);
Integer integer_from_json(const json& j);
long long small_integer(const json& j, const char* what);

json to_json(const intlinalg::IntMatrix& m);
intlinalg::IntMatrix matrix_from_json(const json& j);
json to_json(const IntVector& v);

/// "Z^2 + Z/5"
json to_json(const intlinalg::AbelianGroup& g);
intlinalg::AbelianGroup group_from_json(const json& j);

/// Signed 1-based generator indices: [1, -2] is x1 x2^-1.
json to_json(const presentations::FreeWord& w);
presentations::FreeWord free_word_from_json(const json& j);

/// {"generators": k, "relators": [[...], ...]}
json to_json(const presentations::GroupPresentation& p);
presentations::GroupPresentation presentation_from_json(const json& j);

/// {"strands": n, "letters": [1, -2]}
json to_json(const braid::BraidWord& b);
braid::BraidWord braid_from_json(const json& j);

/// {"strands": n, "bands": [{"w": [...], "i": k}, ...]}
json to_json(const braid::BandFactorization& b);
braid::BandFactorization bands_from_json(const json& j);

/// "S1_3: b1, {a1^-2}b2"
json to_json(const factorization::PositiveFactorization& f);
factorization::PositiveFactorization factorization_from_json(const json& j);

json to_json(const factorization::FillingInvariants& inv);
factorization::FillingInvariants invariants_from_json(const json& j);

/// Numeric strings that fit in 64 bits become numbers, recursively; used so
/// expectations may spell integers either way.
json canonical(const json& j);

}  // namespace fillkit::io

#pragma once

#include "mdbell/inequalities.hpp"
#include "mdbell/scenario.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mdbell {

// The five deterministic catalog models, built exactly as tabulated.
enum class CatalogId { I, II, III, IV, V };

std::string to_string(CatalogId id);
CatalogId parse_catalog_id(std::string_view text);

// Parameters for one catalog model.  Model I takes (p1, p2); the others
// take a single p.  Sign letters not listed default to +1; each model
// accepts exactly its own letters (I: a-d, II: a-i, III: a-c, IV: a-b,
// V: a-e).  Derived primed signs are squares, hence fixed at +1, and are
// not settable.
struct CatalogSpec {
    CatalogId id = CatalogId::I;
    Rational p1 = 0; // model I
    Rational p2 = 0; // model I
    Rational p = 0;  // models II to V
    std::map<std::string, int> signs;

    static CatalogSpec model_i(Rational p1, Rational p2,
                               std::map<std::string, int> signs = {});
    static CatalogSpec with_p(CatalogId id, Rational p,
                              std::map<std::string, int> signs = {});
};

// Model I: L=4, fully local, the four Mermin contexts only.
// Model II: L=9, joint AB, all eight full contexts.
// Model III: L=3, fully local, two full contexts plus three pair contexts.
// Model IV: L=2, fully local, the four Mermin contexts only.
// Model V: L=5, joint AB, all eight full contexts.
Model build_catalog_model(const CatalogSpec& spec);

// The published closed forms for one parameter choice: target inequality,
// S value, and dependence identities.  Model I's identities are stated for
// a completion of its four supplied contexts rather than measured directly
// (measures_via_completion); they are achievable at (0,1) and (1/2,1/2)
// but not at (1,0), where no completion fits those budgets.
struct CatalogClaims {
    InequalityKind target = InequalityKind::Mermin;
    Rational s;
    std::vector<std::pair<MeasureId, Rational>> measures;
    bool measures_via_completion = false;
};

CatalogClaims expected_claims(const CatalogSpec& spec);

} // namespace mdbell

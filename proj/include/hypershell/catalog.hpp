#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypershell/families.hpp"

namespace hypershell {

/// Parse an exact scalar expression. Grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := '-' factor | atom ('^' int)?
///   atom   := rational | 'i' | 'omega' | 'zeta(' int ',' int ')'
///           | 'sqrt(' int ')' | 'cos2pi(' int ')' | '(' expr ')'
/// with i = zeta(4,1), omega = zeta(3,1), cos2pi(n) = zeta(n,1)+zeta(n,-1).
CycNum parse_scalar(const std::string& s);

struct StabilizerEntry {
    std::string a, b;  // the two reflection words fixing the vertex
    std::optional<long> order;  // nullopt = cusp (infinite)
    bool starred = false;       // stabilizer enlarged by a power of P/Q
    std::string nature;
};

/// exponent of a power relation as the rational function (a*p + c)/(b*p + d)
struct RelExp {
    long a = 0, c = 0, b = 0, d = 1;
    /// value at a given p; nullopt when the denominator vanishes
    std::optional<mpq_class> at(long p) const;
};

struct Relation {
    enum Kind { Power, Braid, Eq } kind;
    std::string word, word2;  // Power: word; Braid: the pair; Eq: lhs, rhs
    RelExp exp;               // Power only
    long braid_n = 0;         // Braid only
};

struct ShellClassExpect {
    std::string base, s1, s2;
    long count = 0;  // orbit size under P/Q conjugation
    long gon = 0;    // base polygon size
    std::map<long, std::string> top;  // p -> "trunc" | "ideal"; absent = apex
};

struct CatalogEntry {
    std::string label;           // e.g. "S(4,sigma1)"
    Family family;
    std::string param_label;     // "sigma1", "S2", ... or "" for Mostow
    long p = 0;
    std::optional<mpq_class> mostow_t;
    mpq_class chi;               // orbifold Euler characteristic (catalog data)
    std::string field_name;      // display name of Q(Tr Ad Gamma)
    std::string field_gen;       // expression generating that field
    bool cocompact = true;
    long na_index = 0;           // 0 = arithmetic
    bool algorithm_fails = false;
    std::string alt_label;       // alternative description for failing entries
    std::string type_string;     // expected triangle group type
    std::string trace2;          // expected |tr(R3 R2 R1)|^2, "" if not listed
    std::string fallback_trace2; // expected |tr R1|^2 when trace2 degenerates
    bool lambda_identity = false;  // S(5, sigmabar4) quartic generator check
    std::vector<StabilizerEntry> stabilizers;
    long expected_braid_k = 0;   // Mostow only: br(1, 23~2)
    long expected_oP = 0;        // Mostow only: projective order of P

    bool arithmetic() const { return na_index == 0; }
};

struct CatalogFamily {
    Family family;
    std::string param_label;
    std::vector<std::string> params;  // expressions: [tau] or [rho, sigma, tau]
    std::string type_string;
    std::vector<Relation> presentation;
    std::vector<long> presentation_p;  // restrict relation checks to these p (empty = all)
    std::vector<ShellClassExpect> shell;
    std::vector<CatalogEntry> entries;
};

struct Catalog {
    int schema_version = 1;
    std::vector<CatalogFamily> families;  // the 9 sporadic/Thompson shapes
    std::vector<CatalogEntry> mostow;     // flat list incl. the red rows

    std::vector<const CatalogEntry*> all_entries() const;
    const CatalogEntry* find(const std::string& label) const;
    const CatalogFamily* family_of(const CatalogEntry&) const;
    TriangleGroup build_group(const CatalogEntry&) const;
};

/// load from the given path, or from HYPERSHELL_DATA_DIR/catalog.json
Catalog load_catalog(const std::string& path = "");

/// shell expectations for a Mostow entry ([3] 1;2,3 x oP, [k] 2;1,23~2 x 2)
std::vector<ShellClassExpect> mostow_shell_expect(long braid_k, long oP);
/// the standard Mostow presentation, with k = oP/2 integral
std::vector<Relation> mostow_presentation(long braid_k, long oP);

}  // namespace hypershell

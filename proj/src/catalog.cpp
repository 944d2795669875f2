#include "hypershell/catalog.hpp"

#include <fstream>
#include <json.hpp>
#include <stdexcept>

namespace hypershell {

namespace {

struct ScalarParser {
    const std::string& s;
    size_t i = 0;

    explicit ScalarParser(const std::string& str) : s(str) {}

    void skip_ws() { while (i < s.size() && s[i] == ' ') ++i; }

    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) { ++i; return true; }
        return false;
    }

    long integer() {
        skip_ws();
        bool neg = eat('-');
        skip_ws();
        if (i >= s.size() || !isdigit((unsigned char)s[i]))
            throw std::invalid_argument("scalar: expected integer in '" + s + "'");
        long v = 0;
        while (i < s.size() && isdigit((unsigned char)s[i])) v = 10 * v + (s[i++] - '0');
        return neg ? -v : v;
    }

    bool peek_word(const std::string& w) {
        skip_ws();
        return s.compare(i, w.size(), w) == 0;
    }

    CycNum atom() {
        skip_ws();
        if (eat('(')) {
            CycNum v = expr();
            if (!eat(')')) throw std::invalid_argument("scalar: missing ')' in '" + s + "'");
            return v;
        }
        if (peek_word("zeta(")) {
            i += 5;
            long n = integer();
            if (!eat(',')) throw std::invalid_argument("scalar: zeta needs two arguments");
            long k = integer();
            if (!eat(')')) throw std::invalid_argument("scalar: missing ')'");
            return CycNum::root_of_unity(n, k);
        }
        if (peek_word("sqrt(")) {
            i += 5;
            long n = integer();
            if (!eat(')')) throw std::invalid_argument("scalar: missing ')'");
            return CycNum::sqrt_integer(n);
        }
        if (peek_word("cos2pi(")) {
            i += 7;
            long n = integer();
            if (!eat(')')) throw std::invalid_argument("scalar: missing ')'");
            return CycNum::root_of_unity(n, 1) + CycNum::root_of_unity(n, -1);
        }
        if (peek_word("omega")) {
            i += 5;
            return CycNum::root_of_unity(3, 1);
        }
        if (peek_word("i")) {
            i += 1;
            return CycNum::root_of_unity(4, 1);
        }
        if (i < s.size() && isdigit((unsigned char)s[i])) {
            long v = integer();
            return CycNum(mpq_class(v));
        }
        throw std::invalid_argument("scalar: unexpected token at " + std::to_string(i) + " in '" + s + "'");
    }

    CycNum factor() {
        skip_ws();
        if (eat('-')) return -factor();
        CycNum v = atom();
        skip_ws();
        if (eat('^')) {
            long e = integer();
            v = v.pow(e);
        }
        return v;
    }

    CycNum term() {
        CycNum v = factor();
        for (;;) {
            skip_ws();
            if (eat('*')) v = v * factor();
            else if (eat('/')) v = v / factor();
            else return v;
        }
    }

    CycNum expr() {
        CycNum v = term();
        for (;;) {
            skip_ws();
            if (eat('+')) v = v + term();
            else if (eat('-')) v = v - term();
            else return v;
        }
    }
};

}  // namespace

CycNum parse_scalar(const std::string& s) {
    ScalarParser p(s);
    CycNum v = p.expr();
    p.skip_ws();
    if (p.i != s.size()) throw std::invalid_argument("scalar: trailing characters in '" + s + "'");
    return v.reduced();
}

std::optional<mpq_class> RelExp::at(long p) const {
    mpq_class den(b * p + d);
    if (den == 0) return std::nullopt;
    mpq_class v = mpq_class(a * p + c) / den;
    v.canonicalize();
    return v;
}

namespace {

mpq_class parse_rational(const std::string& s) {
    mpq_class q(s);
    q.canonicalize();
    return q;
}

using nlohmann::json;

Relation parse_relation(const json& j) {
    Relation r;
    std::string kind = j.at("kind");
    if (kind == "power") {
        r.kind = Relation::Power;
        r.word = j.at("word");
        auto e = j.at("exp");
        r.exp = RelExp{e.at(0), e.at(1), e.at(2), e.at(3)};
    } else if (kind == "braid") {
        r.kind = Relation::Braid;
        r.word = j.at("a");
        r.word2 = j.at("b");
        r.braid_n = j.at("n");
    } else if (kind == "eq") {
        r.kind = Relation::Eq;
        r.word = j.at("lhs");
        r.word2 = j.at("rhs");
    } else {
        throw std::invalid_argument("catalog: unknown relation kind " + kind);
    }
    return r;
}

ShellClassExpect parse_shell_class(const json& j) {
    ShellClassExpect c;
    c.base = j.at("base");
    c.s1 = j.at("s1");
    c.s2 = j.at("s2");
    c.count = j.at("count");
    c.gon = j.at("gon");
    if (j.contains("top"))
        for (auto& [k, v] : j.at("top").items()) c.top[std::stol(k)] = v.get<std::string>();
    return c;
}

StabilizerEntry parse_stab(const json& j) {
    StabilizerEntry e;
    e.a = j.at("a");
    e.b = j.at("b");
    if (j.contains("order") && !j.at("order").is_null()) e.order = j.at("order").get<long>();
    if (j.contains("starred")) e.starred = j.at("starred");
    if (j.contains("nature")) e.nature = j.at("nature");
    return e;
}

}  // namespace

std::vector<ShellClassExpect> mostow_shell_expect(long braid_k, long oP) {
    std::vector<ShellClassExpect> out;
    out.push_back({"1", "2", "3", oP, 3, {}});
    if (braid_k > 2) out.push_back({"2", "1", "23~2", 2, braid_k, {}});
    return out;
}

std::vector<Relation> mostow_presentation(long braid_k, long oP) {
    std::vector<Relation> rel;
    rel.push_back({Relation::Power, "1", "", RelExp{1, 0, 0, 1}, 0});
    rel.push_back({Relation::Power, "j", "", RelExp{0, 3, 0, 1}, 0});
    rel.push_back({Relation::Power, "1j", "", RelExp{0, oP, 0, 1}, 0});
    rel.push_back({Relation::Eq, "2", "j1~j", {}, 0});
    rel.push_back({Relation::Eq, "3", "jj1~j~j", {}, 0});
    rel.push_back({Relation::Braid, "1", "2", {}, 3});
    rel.push_back({Relation::Power, "12", "", RelExp{6, 0, 1, -6}, 0});
    if (oP % 2 == 0) {
        long k = oP / 2;
        // (J R2 R1)^{4kp/((2k-4)p-4k)}
        rel.push_back({Relation::Power, "j21", "", RelExp{4 * k, 0, 2 * k - 4, -4 * k}, 0});
    }
    return rel;
}

Catalog load_catalog(const std::string& path) {
    std::string p = path.empty() ? std::string(HYPERSHELL_DATA_DIR) + "/catalog.json" : path;
    std::ifstream in(p);
    if (!in) throw std::runtime_error("catalog: cannot open " + p);
    json j;
    in >> j;
    Catalog cat;
    cat.schema_version = j.at("schema_version");
    for (const auto& jf : j.at("families")) {
        CatalogFamily f;
        std::string fam = jf.at("family");
        f.family = fam == "sporadic" ? Family::Sporadic : Family::Thompson;
        f.param_label = jf.at("param_label");
        for (const auto& s : jf.at("params")) f.params.push_back(s.get<std::string>());
        f.type_string = jf.at("type");
        for (const auto& jr : jf.at("presentation")) f.presentation.push_back(parse_relation(jr));
        if (jf.contains("presentation_p"))
            for (const auto& v : jf.at("presentation_p")) f.presentation_p.push_back(v.get<long>());
        for (const auto& js : jf.at("shell")) f.shell.push_back(parse_shell_class(js));
        for (const auto& je : jf.at("entries")) {
            CatalogEntry e;
            e.family = f.family;
            e.param_label = f.param_label;
            e.p = je.at("p");
            e.label = (f.family == Family::Sporadic ? "S(" : "T(") + std::to_string(e.p) + "," + f.param_label + ")";
            e.chi = parse_rational(je.at("chi"));
            e.field_name = je.at("field");
            e.field_gen = je.at("field_gen");
            e.cocompact = je.at("cocompact");
            e.na_index = je.at("na_index");
            if (je.contains("fails")) e.algorithm_fails = je.at("fails");
            if (je.contains("alt")) e.alt_label = je.at("alt");
            e.type_string = f.type_string;
            if (je.contains("trace2")) e.trace2 = je.at("trace2");
            if (je.contains("fallback_trace2")) e.fallback_trace2 = je.at("fallback_trace2");
            if (je.contains("lambda_identity")) e.lambda_identity = je.at("lambda_identity");
            if (je.contains("stabilizers"))
                for (const auto& js : je.at("stabilizers")) e.stabilizers.push_back(parse_stab(js));
            f.entries.push_back(std::move(e));
        }
        cat.families.push_back(std::move(f));
    }
    for (const auto& jm : j.at("mostow")) {
        CatalogEntry e;
        e.family = Family::Mostow;
        e.p = jm.at("p");
        e.mostow_t = parse_rational(jm.at("t"));
        e.label = "Gamma(" + std::to_string(e.p) + "," + e.mostow_t->get_str() + ")";
        e.chi = parse_rational(jm.at("chi"));
        e.field_name = jm.at("field");
        e.field_gen = jm.at("field_gen");
        e.cocompact = jm.at("cocompact");
        e.na_index = jm.at("na_index");
        if (jm.contains("fails")) e.algorithm_fails = jm.at("fails");
        if (jm.contains("alt")) e.alt_label = jm.at("alt");
        e.expected_braid_k = jm.at("k");
        e.expected_oP = jm.at("oP");
        e.type_string = "3,3,3;" + std::to_string(e.expected_braid_k) + "," + std::to_string(e.expected_braid_k) +
                        "," + std::to_string(e.expected_braid_k) + ";" + std::to_string(e.expected_oP);
        cat.mostow.push_back(std::move(e));
    }
    return cat;
}

std::vector<const CatalogEntry*> Catalog::all_entries() const {
    std::vector<const CatalogEntry*> out;
    for (const auto& f : families)
        for (const auto& e : f.entries) out.push_back(&e);
    for (const auto& e : mostow) out.push_back(&e);
    return out;
}

const CatalogEntry* Catalog::find(const std::string& label) const {
    for (const CatalogEntry* e : all_entries())
        if (e->label == label) return e;
    return nullptr;
}

const CatalogFamily* Catalog::family_of(const CatalogEntry& e) const {
    for (const auto& f : families)
        if (f.family == e.family && f.param_label == e.param_label) return &f;
    return nullptr;
}

TriangleGroup Catalog::build_group(const CatalogEntry& e) const {
    if (e.family == Family::Mostow) return mostow_group(e.p, *e.mostow_t);
    const CatalogFamily* f = family_of(e);
    if (!f) throw std::logic_error("build_group: entry has no family");
    if (e.family == Family::Sporadic) {
        return sporadic_group(e.p, parse_scalar(f->params[0]), e.label);
    }
    std::array<CycNum, 3> T{parse_scalar(f->params[0]), parse_scalar(f->params[1]),
                            parse_scalar(f->params[2])};
    return thompson_group(e.p, T, e.label);
}

}  // namespace hypershell

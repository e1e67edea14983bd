#pragma once

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gmr/ideals.hpp"

namespace gmr::io {

// ---------------------------------------------------------------------------
// words and polynomials
//
// Word syntax: letters separated by blanks or '*', with `tok^k` repeating a
// letter; a token that is no letter name is split into single-character
// letters. `1` (or nothing) is the empty word.
// Polynomial syntax: signed monomials `3/2*a*b - c + 1`.
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::string> split(const std::string& s, const char* seps = " \t*") {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (std::string(seps).find(c) != std::string::npos) {
            if (!cur.empty()) out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

inline void append_token(const Alphabet& A, const std::string& tok, std::vector<Letter>& out) {
    if (tok == "1") return;
    if (auto l = A.find(tok)) {
        out.push_back(*l);
        return;
    }
    // tok^k repeats the letter; tok^-k repeats the letter named tok^-1
    const auto caret = tok.rfind('^');
    if (caret != std::string::npos) {
        const std::string base = tok.substr(0, caret);
        std::string num = tok.substr(caret + 1);
        const bool negative = !num.empty() && num[0] == '-';
        if (negative) num = num.substr(1);
        if (!num.empty() && num.find_first_not_of("0123456789") == std::string::npos) {
            const auto l = negative ? A.find(base + "^-1") : A.find(base);
            if (l) {
                const long k = std::stol(num);
                for (long i = 0; i < k; ++i) out.push_back(*l);
                return;
            }
        }
    }
    // juxtaposed single-character letters
    std::vector<Letter> tmp;
    for (char c : tok) {
        auto l = A.find(std::string(1, c));
        if (!l) throw error("unknown symbol '" + tok + "'");
        tmp.push_back(*l);
    }
    out.insert(out.end(), tmp.begin(), tmp.end());
}

} // namespace detail

inline Word parse_word(const Alphabet& A, const std::string& text) {
    std::vector<Letter> ls;
    for (const auto& tok : detail::split(text)) detail::append_token(A, tok, ls);
    return Word(A, std::move(ls));
}

inline Polynomial parse_polynomial(const Presentation& P, const std::string& line) {
    Polynomial acc(P);
    std::size_t i = 0;
    const std::string& s = line;
    auto skip_ws = [&] { while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i; };
    skip_ws();
    bool first = true;
    while (i < s.size()) {
        Rat sign(1);
        skip_ws();
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-') sign = -1;
            ++i;
        } else if (!first) {
            throw error("polynomial: expected '+' or '-' near '" + s.substr(i) + "'");
        }
        first = false;
        skip_ws();
        // one monomial: factors separated by '*'
        Rat coeff(1);
        std::vector<Letter> word;
        bool any = false;
        while (i < s.size()) {
            skip_ws();
            std::size_t j = i;
            // a '-' directly after '^' is an exponent sign, not a new monomial
            while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '*' && s[j] != '+' &&
                   (s[j] != '-' || (j > i && s[j - 1] == '^')))
                ++j;
            const std::string tok = s.substr(i, j - i);
            if (tok.empty()) break;
            if (tok.find_first_not_of("0123456789/") == std::string::npos) {
                const auto slash = tok.find('/');
                if (tok.empty() || slash == 0 || slash == tok.size() - 1 ||
                    tok.find('/', slash + 1) != std::string::npos)
                    throw error("polynomial: malformed rational '" + tok + "'");
                Rat r(tok);
                if (slash != std::string::npos && r.get_den() == 0)
                    throw error("polynomial: zero denominator in '" + tok + "'");
                r.canonicalize();
                coeff *= r;
            } else {
                detail::append_token(P.alphabet(), tok, word);
            }
            any = true;
            i = j;
            skip_ws();
            if (i < s.size() && s[i] == '*') {
                ++i;
                continue;
            }
            break;
        }
        if (!any) throw error("polynomial: empty monomial in '" + line + "'");
        acc.add_term(P.element(Word(P.alphabet(), std::move(word))), sign * coeff);
        skip_ws();
    }
    return acc;
}

inline std::string format_polynomial(const Polynomial& p) { return p.str(); }

// ---------------------------------------------------------------------------
// presentation files
// ---------------------------------------------------------------------------

namespace detail {

struct PresFile {
    std::map<std::string, std::string> keys;
    std::vector<std::pair<std::string, std::string>> rules;   // lhs -> rhs
    std::vector<std::vector<std::string>> table;              // finite monoid rows
    std::vector<std::pair<std::string, std::string>> phi;     // "e x" -> word
    std::vector<std::pair<std::string, std::string>> cocycle; // "e1 e2" -> word
};

inline PresFile read_pres_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open '" + path.string() + "'");
    PresFile f;
    std::string line;
    std::string section;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
            line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        line = line.substr(start);
        auto fail = [&](const std::string& msg) {
            throw error(path.string() + ":" + std::to_string(lineno) + ": " + msg);
        };
        if (line.back() == ':' && line.find('=') == std::string::npos) {
            section = line.substr(0, line.size() - 1);
            if (section != "rules" && section != "table" && section != "phi" &&
                section != "cocycle")
                fail("unknown section '" + section + "'");
            continue;
        }
        if (section.empty()) {
            const auto eq = line.find('=');
            if (eq == std::string::npos) fail("expected 'key = value'");
            std::string key = line.substr(0, eq);
            std::string val = line.substr(eq + 1);
            auto trim = [](std::string& t) {
                const auto b = t.find_first_not_of(" \t");
                const auto e = t.find_last_not_of(" \t");
                t = b == std::string::npos ? "" : t.substr(b, e - b + 1);
            };
            trim(key);
            trim(val);
            f.keys[key] = val;
            continue;
        }
        if (section == "table") {
            f.table.push_back(split(line, " \t"));
            continue;
        }
        const auto arrow = line.find("->");
        if (arrow == std::string::npos) fail("expected 'lhs -> rhs'");
        std::string lhs = line.substr(0, arrow);
        std::string rhs = line.substr(arrow + 2);
        if (section == "rules") f.rules.emplace_back(lhs, rhs);
        else if (section == "phi") f.phi.emplace_back(lhs, rhs);
        else f.cocycle.emplace_back(lhs, rhs);
    }
    return f;
}

inline OrderingSpec parse_ordering(const std::string& s) {
    if (s.empty() || s == "length-lex") return OrderingSpec::lenlex();
    if (s == "lex") return OrderingSpec::lex();
    if (s == "syllable-left") return OrderingSpec::syllable(false);
    if (s == "syllable" || s == "syllable-right") return OrderingSpec::syllable(true);
    throw error("unknown ordering '" + s + "'");
}

} // namespace detail

inline Presentation load_presentation(const std::filesystem::path& path) {
    using detail::PresFile;
    const PresFile f = detail::read_pres_file(path);
    auto key = [&f](const std::string& k) {
        auto it = f.keys.find(k);
        return it == f.keys.end() ? std::string() : it->second;
    };
    const std::string cls = key("class");
    if (cls.empty()) throw error(path.string() + ": missing 'class'");

    if (cls == "finite-monoid") {
        std::vector<std::string> elements = detail::split(key("elements"), " \t");
        if (elements.empty()) throw error(path.string() + ": finite monoid needs 'elements'");
        std::map<std::string, std::size_t> idx;
        for (std::size_t i = 0; i < elements.size(); ++i) idx[elements[i]] = i;
        if (f.table.size() != elements.size())
            throw error(path.string() + ": table must have one row per element");
        std::vector<std::vector<std::size_t>> table;
        for (const auto& row : f.table) {
            if (row.size() != elements.size())
                throw error(path.string() + ": ragged multiplication table");
            std::vector<std::size_t> r;
            for (const auto& name : row) {
                auto it = idx.find(name);
                if (it == idx.end())
                    throw error(path.string() + ": unknown element '" + name + "' in table");
                r.push_back(it->second);
            }
            table.push_back(std::move(r));
        }
        return Presentation::from_mult_table(elements, table);
    }

    if (cls == "context-free-group" || cls == "nilpotent-extension") {
        const auto dir = path.parent_path();
        const std::string fin = key("finite");
        const std::string inn = key("inner");
        if (fin.empty() || inn.empty())
            throw error(path.string() + ": extension needs 'finite' and 'inner' paths");
        Presentation finite = load_presentation(dir / fin);
        Presentation inner = load_presentation(dir / inn);
        std::map<std::pair<std::string, std::string>, std::vector<std::string>> phi, coc;
        for (const auto& [l, r] : f.phi) {
            auto parts = detail::split(l, " \t");
            if (parts.size() != 2)
                throw error(path.string() + ": phi lines read 'e x -> word'");
            std::vector<std::string> img;
            for (const auto& tok : detail::split(r)) {
                if (tok == "1") continue;
                img.push_back(tok);
            }
            phi[{parts[0], parts[1]}] = img;
        }
        for (const auto& [l, r] : f.cocycle) {
            auto parts = detail::split(l, " \t");
            if (parts.size() != 2)
                throw error(path.string() + ": cocycle lines read 'e1 e2 -> word'");
            std::vector<std::string> img;
            for (const auto& tok : detail::split(r)) {
                if (tok == "1") continue;
                img.push_back(tok);
            }
            coc[{parts[0], parts[1]}] = img;
        }
        return Presentation::assemble_extension(finite, inner, phi, coc);
    }

    if (cls == "commutative-monoid") {
        std::vector<std::string> gens = detail::split(key("generators"), " \t");
        if (gens.empty()) throw error(path.string() + ": commutative monoid needs 'generators'");
        Alphabet A(gens);
        auto vec = [&](const std::string& text) {
            std::vector<Letter> ls;
            for (const auto& tok : detail::split(text)) detail::append_token(A, tok, ls);
            std::vector<long long> e(gens.size(), 0);
            for (Letter l : ls) e[static_cast<std::size_t>(l)] += 1;
            return ExpVec(std::move(e), Signedness::Natural);
        };
        std::vector<CommRule> rules;
        for (const auto& [l, r] : f.rules) rules.push_back({vec(l), vec(r)});
        return Presentation::commutative(CommRewriteSystem(gens, std::move(rules)));
    }

    StructureClass tag;
    if (cls == "monoid") tag = StructureClass::Monoid;
    else if (cls == "free-monoid") tag = StructureClass::FreeMonoid;
    else if (cls == "free-group") tag = StructureClass::FreeGroup;
    else if (cls == "plain-group") tag = StructureClass::PlainGroup;
    else if (cls == "nilpotent-cni") tag = StructureClass::NilpotentCNI;
    else throw error(path.string() + ": unknown class '" + cls + "'");

    std::vector<std::string> letters = detail::split(key("letters"), " \t");
    if (letters.empty()) throw error(path.string() + ": missing 'letters'");
    std::vector<std::pair<std::string, std::string>> invol;
    for (const auto& pair : detail::split(key("involution"), " \t,")) {
        const auto colon = pair.find(':');
        if (colon == std::string::npos)
            throw error(path.string() + ": involution entries read 'x:y'");
        invol.emplace_back(pair.substr(0, colon), pair.substr(colon + 1));
    }
    Alphabet A(letters, invol);
    std::vector<Rule> rules;
    for (const auto& [l, r] : f.rules) rules.push_back({parse_word(A, l), parse_word(A, r)});
    SemiThueSystem sts(A, std::move(rules), detail::parse_ordering(key("ordering")));
    return Presentation::word_based(tag, sts);
}

inline std::vector<Polynomial> load_polynomials(const Presentation& P,
                                                const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open '" + path.string() + "'");
    std::vector<Polynomial> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            out.push_back(parse_polynomial(P, line));
        } catch (const error& e) {
            throw error(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

inline void save_polynomials(std::span<const Polynomial> ps, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw error("cannot write '" + path.string() + "'");
    for (const auto& p : ps) out << format_polynomial(p) << "\n";
}

// ---------------------------------------------------------------------------
// JSON answers and statistics
// ---------------------------------------------------------------------------

inline nlohmann::json answer_json(const MembershipAnswer& ans) {
    nlohmann::json j;
    j["verdict"] = verdict_name(ans.verdict);
    j["witness"] = nlohmann::json::array();
    for (const auto& it : ans.witness) {
        nlohmann::json w;
        w["coeff"] = it.coeff.get_str();
        w["index"] = it.index;
        w["right"] = it.right.str();
        if (it.left) w["left"] = it.left->str();
        j["witness"].push_back(std::move(w));
    }
    return j;
}

inline nlohmann::json stats_json(const GBResult& res) {
    nlohmann::json j;
    j["status"] = res.status == GBStatus::Complete ? "complete" : "fuel-exhausted";
    j["basis_size"] = res.basis.size();
    j["spolynomials"] = res.stats.spolys_considered;
    j["reductions"] = res.stats.reductions;
    j["saturations"] = res.stats.saturations;
    return j;
}

} // namespace gmr::io

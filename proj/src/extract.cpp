#include "conet/extract.hpp"

#include <algorithm>
#include <cctype>

namespace conet {

namespace {

bool is_ascii_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_ascii_alpha(char c) { return (c >= 'a' && c <= 'z') || is_ascii_upper(c); }
bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }

// Token characters: letters, digits, hyphen, apostrophe, and any non-ASCII
// byte (UTF-8 sequences pass through untouched). Hyphenated surnames stay
// single tokens.
bool is_token_char(char c) {
    return is_ascii_alpha(c) || is_ascii_digit(c) || c == '-' || c == '\'' ||
           static_cast<unsigned char>(c) >= 0x80;
}

struct Token {
    std::string text;          // includes an attached trailing period, if any
    std::size_t begin = 0;
    std::size_t end = 0;
    bool capitalized = false;  // first char is an ASCII capital
    bool is_initial = false;   // single capital letter + attached period
    bool follows_break = false;// separated from the previous token by
                               // punctuation (or starts the text)
};

std::vector<Token> tokenize(std::string_view text, const Lexicon& lexicon) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    bool pending_break = true;
    while (i < text.size()) {
        if (!is_token_char(text[i])) {
            if (!std::isspace(static_cast<unsigned char>(text[i]))) pending_break = true;
            ++i;
            continue;
        }
        std::size_t b = i;
        while (i < text.size() && is_token_char(text[i])) ++i;
        Token tok;
        tok.text.assign(text.substr(b, i - b));
        tok.begin = b;
        tok.end = i;
        // Attach a following period to initials ("D.") and to suffix
        // abbreviations ("Corp."); any other period is a separator.
        if (i < text.size() && text[i] == '.') {
            bool initial_like = tok.text.size() == 1 && is_ascii_upper(tok.text[0]);
            bool suffix_like = lexicon.is_company_suffix(tok.text);
            if (initial_like || suffix_like) {
                tok.text.push_back('.');
                ++i;
                tok.end = i;
                tok.is_initial = initial_like;
            }
        }
        tok.capitalized = is_ascii_upper(tok.text[0]);
        tok.follows_break = pending_break;
        pending_break = false;
        tokens.push_back(std::move(tok));
    }
    return tokens;
}

// True when tokens [i, i+len) exist and can form one match: no hard break
// inside.
bool contiguous(const std::vector<Token>& toks, std::size_t i, std::size_t len) {
    if (i + len > toks.size()) return false;
    for (std::size_t k = i + 1; k < i + len; ++k) {
        if (toks[k].follows_break) return false;
    }
    return true;
}

bool is_plain_capitalized(const Token& t) { return t.capitalized && !t.is_initial; }

Match make_match(std::string_view text, const std::vector<Token>& toks,
                 std::size_t i, std::size_t len) {
    std::size_t b = toks[i].begin;
    std::size_t e = toks[i + len - 1].end;
    return Match{std::string(text.substr(b, e - b)), b, e};
}

// Longest person-rule match starting at token i; 0 if none.
std::size_t person_match_len(const std::vector<Token>& toks, std::size_t i,
                             const Lexicon& lex) {
    const Token& t0 = toks[i];
    // R1: Initial [Initial] Surname
    if (t0.is_initial) {
        if (i + 2 < toks.size() && contiguous(toks, i, 3) && toks[i + 1].is_initial &&
            is_plain_capitalized(toks[i + 2]) && lex.is_surname(toks[i + 2].text)) {
            return 3;
        }
        if (i + 1 < toks.size() && contiguous(toks, i, 2) &&
            is_plain_capitalized(toks[i + 1]) && lex.is_surname(toks[i + 1].text)) {
            return 2;
        }
        return 0;
    }
    if (!is_plain_capitalized(t0)) return 0;
    // R2: Surname Initial [Initial]
    if (lex.is_surname(t0.text)) {
        if (i + 2 < toks.size() && contiguous(toks, i, 3) && toks[i + 1].is_initial &&
            toks[i + 2].is_initial) {
            return 3;
        }
        if (i + 1 < toks.size() && contiguous(toks, i, 2) && toks[i + 1].is_initial) {
            return 2;
        }
    }
    // R3: GivenName CapitalizedToken (the second token need not be in the
    // surname table; adjacency to a lexicon given name qualifies it)
    if (lex.is_given_name(t0.text) && i + 1 < toks.size() && contiguous(toks, i, 2) &&
        is_plain_capitalized(toks[i + 1])) {
        return 2;
    }
    return 0;
}

// Longest company-rule match starting at token i; 0 if none.
std::size_t company_match_len(const std::vector<Token>& toks, std::size_t i,
                              const Lexicon& lex) {
    std::size_t best = 0;
    // Known company names, matched as case-insensitive token sequences.
    if (const auto* candidates =
            lex.known_companies_starting_with(ascii_lower(toks[i].text))) {
        for (const auto& seq : *candidates) { // longest first
            std::size_t len = seq.size();
            if (len <= best || !contiguous(toks, i, len)) continue;
            bool ok = true;
            for (std::size_t k = 0; k < len; ++k) {
                if (ascii_lower(toks[i + k].text) != seq[k]) { ok = false; break; }
            }
            if (ok) { best = len; break; }
        }
    }
    // Run of 1-4 capitalized tokens + suffix, suffix included in the match.
    for (std::size_t run = 4; run >= 1; --run) {
        std::size_t len = run + 1;
        if (len <= best || i + len > toks.size() || !contiguous(toks, i, len)) continue;
        bool caps_ok = true;
        for (std::size_t k = 0; k < run; ++k) {
            if (!is_plain_capitalized(toks[i + k])) { caps_ok = false; break; }
        }
        if (caps_ok && lex.is_company_suffix(toks[i + run].text)) {
            best = len;
            break;
        }
    }
    return best;
}

template <typename MatchLenFn>
std::vector<Match> scan(std::string_view text, const Lexicon& lex, MatchLenFn&& fn) {
    std::vector<Token> toks = tokenize(text, lex);
    std::vector<Match> out;
    std::size_t i = 0;
    while (i < toks.size()) {
        std::size_t len = fn(toks, i, lex);
        if (len > 0) {
            out.push_back(make_match(text, toks, i, len));
            i += len;
        } else {
            ++i;
        }
    }
    return out;
}

std::string strip_trailing_period(std::string s) {
    while (!s.empty() && s.back() == '.') s.pop_back();
    return s;
}

// "D.", "D.V.", bare "D": a cluster of initials.
bool is_initial_cluster(std::string_view piece) {
    if (piece.empty() || piece.size() > 8) return false;
    bool expect_letter = true;
    for (char c : piece) {
        if (expect_letter) {
            if (!is_ascii_upper(c)) return false;
            expect_letter = false;
        } else {
            if (c != '.') return false;
            expect_letter = true;
        }
    }
    return true;
}

std::string collapse_whitespace_upper(const std::vector<std::string>& pieces) {
    std::string out;
    for (const auto& p : pieces) {
        if (!out.empty()) out.push_back(' ');
        out += ascii_upper(p);
    }
    return out;
}

std::vector<std::string> split_whitespace(std::string_view s) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t b = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i > b) out.emplace_back(s.substr(b, i - b));
    }
    return out;
}

std::string canonical_person(std::string_view surface) {
    std::vector<std::string> pieces = split_whitespace(surface);
    std::vector<std::string> words;
    std::vector<std::string> initials;
    for (const auto& p : pieces) {
        if (is_initial_cluster(p)) initials.push_back(p);
        else words.push_back(p);
    }
    if (words.size() == 1 && !initials.empty()) {
        // "D. Lande", "D.V. Lande", "Lande D.V." -- surname + first initial
        return ascii_upper(words[0]) + "|" + std::string(1, initials[0][0]);
    }
    if (words.size() == 2 && initials.empty()) {
        // "Dmitri Lande" -- given name supplies the initial
        return ascii_upper(words[1]) + "|" +
               std::string(1, static_cast<char>(std::toupper(
                                  static_cast<unsigned char>(words[0][0]))));
    }
    // No template fits (single labels, already-canonical ids): pass through.
    return collapse_whitespace_upper(pieces);
}

std::string canonical_company(const Lexicon& lexicon, std::string_view surface) {
    std::vector<std::string> pieces = split_whitespace(surface);
    if (pieces.size() >= 2 && lexicon.is_company_suffix(pieces.back())) {
        pieces.pop_back();
    }
    for (auto& p : pieces) p = strip_trailing_period(p);
    return collapse_whitespace_upper(pieces);
}

} // namespace

std::vector<Match> extract_persons(std::string_view text, const Lexicon& lexicon) {
    return scan(text, lexicon,
                [](const std::vector<Token>& t, std::size_t i, const Lexicon& l) {
                    return person_match_len(t, i, l);
                });
}

std::vector<Match> extract_companies(std::string_view text, const Lexicon& lexicon) {
    return scan(text, lexicon,
                [](const std::vector<Token>& t, std::size_t i, const Lexicon& l) {
                    return company_match_len(t, i, l);
                });
}

std::string canonicalize(const Lexicon& lexicon, std::string_view surface,
                         ConceptKind kind) {
    return kind == ConceptKind::person ? canonical_person(surface)
                                       : canonical_company(lexicon, surface);
}

void ConceptTable::record(const std::string& id, ConceptKind kind,
                          const std::string& surface) {
    auto it = concepts_.try_emplace(id, Concept{id, kind, {}}).first;
    it->second.surface_forms.insert(surface);
}

const Concept* ConceptTable::find(const std::string& id) const {
    auto it = concepts_.find(id);
    return it == concepts_.end() ? nullptr : &it->second;
}

std::vector<const Concept*> ConceptTable::all_sorted() const {
    std::vector<const Concept*> out;
    out.reserve(concepts_.size());
    for (const auto& [id, concept] : concepts_) out.push_back(&concept);
    return out;
}

std::set<std::string> extract_document(const Document& doc, const Lexicon& lexicon,
                                       ConceptTable* table) {
    std::set<std::string> ids;
    auto add = [&](ConceptKind kind, const std::string& surface) {
        std::string id = canonicalize(lexicon, surface, kind);
        if (id.empty()) return;
        ids.insert(id);
        if (table) table->record(id, kind, surface);
    };
    if (doc.text) {
        for (const Match& m : extract_persons(*doc.text, lexicon)) {
            add(ConceptKind::person, m.surface);
        }
        for (const Match& m : extract_companies(*doc.text, lexicon)) {
            add(ConceptKind::company, m.surface);
        }
    } else if (doc.concepts) {
        for (const ConceptMention& m : *doc.concepts) {
            add(m.kind, m.surface);
        }
    }
    return ids;
}

} // namespace conet

// Rule-based extraction of person and company mentions.
//
// Person rules over the token stream (longest match first, left to right,
// non-overlapping):
//   R1  Initial [Initial] Surname        "D. Lande", "D.V. Lande"
//   R2  Surname Initial [Initial]        "Lande D.V."
//   R3  GivenName CapitalizedToken       "Dmitri Lande"
// where an Initial is a single capital letter with an attached period,
// Surname must appear in the surname table, and GivenName in the given-name
// table. Company rules: known company names matched as token sequences, and
// runs of 1-4 capitalized tokens immediately followed by a company suffix
// (suffix included in the surface form).
//
// Matches never cross hard breaks (punctuation other than the periods
// attached to initials and suffixes), so "...saw Lande. D. Smith..." yields
// "D. Smith", not "Lande D.".

#pragma once

#include "conet/corpus.hpp"
#include "conet/lexicon.hpp"

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace conet {

struct Match {
    std::string surface;
    std::size_t begin = 0; // byte offsets into the input text
    std::size_t end = 0;

    bool operator==(const Match&) const = default;
};

std::vector<Match> extract_persons(std::string_view text, const Lexicon& lexicon);
std::vector<Match> extract_companies(std::string_view text, const Lexicon& lexicon);

// Canonical identity of a mention. Persons collapse to "SURNAME|F" (surname
// plus first initial, uppercased); companies to the suffix-stripped,
// whitespace-collapsed, uppercased name. Surfaces that fit no person
// template (single labels in pre-extracted corpora) pass through uppercased.
std::string canonicalize(const Lexicon& lexicon, std::string_view surface,
                         ConceptKind kind);

// Canonical identity plus every surface form observed for it.
struct Concept {
    std::string id;
    ConceptKind kind;
    std::set<std::string> surface_forms;
};

class ConceptTable {
public:
    void record(const std::string& id, ConceptKind kind, const std::string& surface);

    const Concept* find(const std::string& id) const;
    std::vector<const Concept*> all_sorted() const; // by id

private:
    std::map<std::string, Concept> concepts_;
};

// Concept ids mentioned in one document, deduplicated (set semantics). For
// raw-text documents runs both extractors; for pre-extracted documents
// canonicalizes the listed mentions. Optionally records surfaces in `table`.
std::set<std::string> extract_document(const Document& doc, const Lexicon& lexicon,
                                       ConceptTable* table = nullptr);

} // namespace conet

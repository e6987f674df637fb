// Lexicon tables driving rule-based extraction: allowable given names and
// surnames for person rules, company name suffixes and known company names
// for company rules.
//
// Files are plain UTF-8, one entry per line, '#' starts a comment line.
// Lookup is case-insensitive (ASCII folding); matching in text requires
// capitalization as written in the rules.

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace conet {

std::string ascii_lower(std::string_view s);
std::string ascii_upper(std::string_view s);

class Lexicon {
public:
    void add_given_name(std::string_view name);
    void add_surname(std::string_view name);
    void add_company_suffix(std::string_view suffix);
    void add_known_company(std::string_view name);

    void load_given_names(const std::filesystem::path& path);
    void load_surnames(const std::filesystem::path& path);
    void load_company_suffixes(const std::filesystem::path& path);
    void load_known_companies(const std::filesystem::path& path);

    bool is_given_name(std::string_view token) const;
    bool is_surname(std::string_view token) const;

    // Suffix lookup ignores case and a trailing period, so an entry "Corp."
    // also covers "Corp" and "corp.".
    bool is_company_suffix(std::string_view token) const;

    // Known company names as lowercased token sequences, grouped by first
    // token, longest sequence first (for longest-match scanning).
    const std::vector<std::vector<std::string>>*
    known_companies_starting_with(std::string_view first_token_lower) const;

    bool has_person_tables() const { return !surnames_.empty() || !given_names_.empty(); }
    bool has_company_tables() const { return !suffix_keys_.empty() || !known_companies_.empty(); }

    // The paper-style default suffix table, used when no suffix file is
    // supplied (canonicalization of pre-extracted company names needs one).
    static const std::vector<std::string>& default_company_suffixes();
    static Lexicon with_default_suffixes();

private:
    std::unordered_set<std::string> given_names_;
    std::unordered_set<std::string> surnames_;
    std::unordered_set<std::string> suffix_keys_;
    std::unordered_map<std::string, std::vector<std::vector<std::string>>> known_companies_;
};

} // namespace conet

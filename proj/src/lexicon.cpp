#include "conet/lexicon.hpp"

#include "conet/error.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

namespace conet {

std::string ascii_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
}

std::string ascii_upper(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
    }
    return out;
}

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::string strip_trailing_period(std::string s) {
    while (!s.empty() && s.back() == '.') s.pop_back();
    return s;
}

std::vector<std::string> whitespace_tokens(std::string_view s) {
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

template <typename Fn>
void load_lines(const std::filesystem::path& path, Fn&& add) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open lexicon file: " + path.string());
    std::string line;
    while (std::getline(in, line)) {
        std::string entry = trim(line);
        if (entry.empty() || entry[0] == '#') continue;
        add(entry);
    }
}

} // namespace

void Lexicon::add_given_name(std::string_view name) {
    given_names_.insert(ascii_lower(trim(name)));
}

void Lexicon::add_surname(std::string_view name) {
    surnames_.insert(ascii_lower(trim(name)));
}

void Lexicon::add_company_suffix(std::string_view suffix) {
    suffix_keys_.insert(strip_trailing_period(ascii_lower(trim(suffix))));
}

void Lexicon::add_known_company(std::string_view name) {
    std::vector<std::string> tokens = whitespace_tokens(trim(name));
    if (tokens.empty()) return;
    for (std::string& t : tokens) t = ascii_lower(t);
    auto& bucket = known_companies_[tokens.front()];
    bucket.push_back(std::move(tokens));
    // Longest first, then lexicographic: deterministic longest-match scans.
    std::sort(bucket.begin(), bucket.end(),
              [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
                  if (a.size() != b.size()) return a.size() > b.size();
                  return a < b;
              });
    bucket.erase(std::unique(bucket.begin(), bucket.end()), bucket.end());
}

void Lexicon::load_given_names(const std::filesystem::path& path) {
    load_lines(path, [this](const std::string& e) { add_given_name(e); });
}

void Lexicon::load_surnames(const std::filesystem::path& path) {
    load_lines(path, [this](const std::string& e) { add_surname(e); });
}

void Lexicon::load_company_suffixes(const std::filesystem::path& path) {
    load_lines(path, [this](const std::string& e) { add_company_suffix(e); });
}

void Lexicon::load_known_companies(const std::filesystem::path& path) {
    load_lines(path, [this](const std::string& e) { add_known_company(e); });
}

bool Lexicon::is_given_name(std::string_view token) const {
    return given_names_.count(ascii_lower(token)) > 0;
}

bool Lexicon::is_surname(std::string_view token) const {
    return surnames_.count(ascii_lower(token)) > 0;
}

bool Lexicon::is_company_suffix(std::string_view token) const {
    return suffix_keys_.count(strip_trailing_period(ascii_lower(token))) > 0;
}

const std::vector<std::vector<std::string>>*
Lexicon::known_companies_starting_with(std::string_view first_token_lower) const {
    auto it = known_companies_.find(std::string(first_token_lower));
    return it == known_companies_.end() ? nullptr : &it->second;
}

const std::vector<std::string>& Lexicon::default_company_suffixes() {
    static const std::vector<std::string> suffixes = {
        "Inc", "Corp.", "Ltd", "Company", "Co", "LLC", "PLC", "GmbH",
    };
    return suffixes;
}

Lexicon Lexicon::with_default_suffixes() {
    Lexicon lex;
    for (const auto& s : default_company_suffixes()) lex.add_company_suffix(s);
    return lex;
}

} // namespace conet

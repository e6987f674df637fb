// Corpus I/O: line-delimited JSON documents, one per line.
//
// A record is {"id": ..., "timestamp": ..., "text": ...} for a raw-text
// corpus or {"id": ..., "timestamp": ..., "concepts": [[kind, surface],
// ...]} for a pre-extracted one; timestamp is optional metadata. File
// order is the temporal order of the flow, so a "checkpoint at D" always
// means the first D lines of the file.

#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_set>
#include <vector>

namespace conet {

enum class CorpusFormat { raw_text, pre_extracted };

CorpusFormat parse_corpus_format(const std::string& name);
std::string to_string(CorpusFormat format);

enum class ConceptKind { person, company };

ConceptKind parse_concept_kind(const std::string& name);
std::string to_string(ConceptKind kind);

struct ConceptMention {
    ConceptKind kind;
    std::string surface;

    bool operator==(const ConceptMention&) const = default;
};

struct Document {
    std::string id;
    std::optional<std::int64_t> timestamp;
    std::optional<std::string> text;
    std::optional<std::vector<ConceptMention>> concepts;

    bool operator==(const Document&) const = default;
};

// Parses one corpus line. Enforces the Document invariants (exactly one of
// text/concepts, matching the declared format; non-empty id) and reports
// violations as ParseError with file:line context.
Document parse_document_line(const std::string& line, CorpusFormat format,
                             const std::string& file, std::size_t line_number);

std::string serialize_document(const Document& doc);

// Single-pass streaming reader. Holds one document at a time; only the set
// of already-seen ids is retained (for duplicate detection).
class CorpusReader {
public:
    CorpusReader(std::filesystem::path path, CorpusFormat format);

    // Next document in file order, or nullopt at end of file.
    std::optional<Document> next();

    std::size_t line_number() const { return line_; }

private:
    std::filesystem::path path_;
    CorpusFormat format_;
    std::ifstream in_;
    std::size_t line_ = 0;
    std::unordered_set<std::string> seen_ids_;
};

std::vector<Document> read_documents(const std::filesystem::path& path,
                                     CorpusFormat format);

// Writes documents atomically; the result re-reads to the same sequence.
void write_documents(const std::vector<Document>& docs,
                     const std::filesystem::path& path);

} // namespace conet

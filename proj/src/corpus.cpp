#include "conet/corpus.hpp"

#include "conet/error.hpp"
#include "conet/io_util.hpp"

#include <json.hpp>

#include <utility>

namespace conet {

using ordered_json = nlohmann::ordered_json;

CorpusFormat parse_corpus_format(const std::string& name) {
    if (name == "raw-text") return CorpusFormat::raw_text;
    if (name == "pre-extracted") return CorpusFormat::pre_extracted;
    throw Error("unknown corpus format: " + name + " (expected raw-text or pre-extracted)");
}

std::string to_string(CorpusFormat format) {
    return format == CorpusFormat::raw_text ? "raw-text" : "pre-extracted";
}

ConceptKind parse_concept_kind(const std::string& name) {
    if (name == "person") return ConceptKind::person;
    if (name == "company") return ConceptKind::company;
    throw Error("unknown concept kind: " + name);
}

std::string to_string(ConceptKind kind) {
    return kind == ConceptKind::person ? "person" : "company";
}

Document parse_document_line(const std::string& line, CorpusFormat format,
                             const std::string& file, std::size_t line_number) {
    auto fail = [&](const std::string& what) -> ParseError {
        return ParseError(file, line_number, what);
    };

    ordered_json j;
    try {
        j = ordered_json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw fail(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw fail("record is not a JSON object");

    Document doc;
    for (const auto& [key, value] : j.items()) {
        if (key == "id") {
            if (!value.is_string()) throw fail("\"id\" must be a string");
            doc.id = value.get<std::string>();
        } else if (key == "timestamp") {
            if (!value.is_number_integer()) throw fail("\"timestamp\" must be an integer");
            doc.timestamp = value.get<std::int64_t>();
        } else if (key == "text") {
            if (!value.is_string()) throw fail("\"text\" must be a string");
            doc.text = value.get<std::string>();
        } else if (key == "concepts") {
            if (!value.is_array()) throw fail("\"concepts\" must be an array");
            std::vector<ConceptMention> mentions;
            mentions.reserve(value.size());
            for (const auto& item : value) {
                if (!item.is_array() || item.size() != 2 ||
                    !item[0].is_string() || !item[1].is_string()) {
                    throw fail("each concept must be a [kind, surface] pair of strings");
                }
                ConceptMention m;
                try {
                    m.kind = parse_concept_kind(item[0].get<std::string>());
                } catch (const Error& e) {
                    throw fail(e.what());
                }
                m.surface = item[1].get<std::string>();
                if (m.surface.empty()) throw fail("concept surface must be non-empty");
                mentions.push_back(std::move(m));
            }
            doc.concepts = std::move(mentions);
        } else {
            throw fail("unknown field \"" + key + "\"");
        }
    }

    if (doc.id.empty()) throw fail("missing or empty \"id\"");
    if (doc.text.has_value() == doc.concepts.has_value()) {
        throw fail("record must have exactly one of \"text\" and \"concepts\"");
    }
    if (format == CorpusFormat::raw_text && !doc.text) {
        throw fail("raw-text corpus record lacks \"text\"");
    }
    if (format == CorpusFormat::pre_extracted && !doc.concepts) {
        throw fail("pre-extracted corpus record lacks \"concepts\"");
    }
    return doc;
}

std::string serialize_document(const Document& doc) {
    ordered_json j;
    j["id"] = doc.id;
    if (doc.timestamp) j["timestamp"] = *doc.timestamp;
    if (doc.text) {
        j["text"] = *doc.text;
    } else {
        ordered_json arr = ordered_json::array();
        for (const auto& m : *doc.concepts) {
            arr.push_back(ordered_json::array({to_string(m.kind), m.surface}));
        }
        j["concepts"] = std::move(arr);
    }
    return j.dump();
}

CorpusReader::CorpusReader(std::filesystem::path path, CorpusFormat format)
    : path_(std::move(path)), format_(format), in_(path_) {
    if (!in_) throw IoError("cannot open corpus: " + path_.string());
}

std::optional<Document> CorpusReader::next() {
    std::string line;
    while (std::getline(in_, line)) {
        ++line_;
        if (line.empty()) continue;
        Document doc = parse_document_line(line, format_, path_.string(), line_);
        if (!seen_ids_.insert(doc.id).second) {
            throw ParseError(path_.string(), line_, "duplicate document id \"" + doc.id + "\"");
        }
        return doc;
    }
    return std::nullopt;
}

std::vector<Document> read_documents(const std::filesystem::path& path,
                                     CorpusFormat format) {
    CorpusReader reader(path, format);
    std::vector<Document> docs;
    while (auto doc = reader.next()) {
        docs.push_back(std::move(*doc));
    }
    return docs;
}

void write_documents(const std::vector<Document>& docs,
                     const std::filesystem::path& path) {
    atomic_write(path, [&](std::ostream& out) {
        for (const auto& doc : docs) {
            out << serialize_document(doc) << '\n';
        }
    });
}

} // namespace conet

#include "detoxeval/corpus.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <unordered_set>

#include "detoxeval/error.hpp"
#include "detoxeval/text.hpp"

namespace detoxeval {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void fail_line(const std::string& path, std::size_t line, const std::string& msg) {
    throw ValidationError(path + ":" + std::to_string(line) + ": " + msg);
}

std::string require_string(const ordered_json& rec, const char* key, const std::string& path,
                           std::size_t line) {
    if (!rec.contains(key) || !rec[key].is_string()) {
        fail_line(path, line, std::string("missing or non-string \"") + key + "\" field");
    }
    return rec[key].get<std::string>();
}

Lang require_lang(const ordered_json& rec, const std::string& path, std::size_t line) {
    std::string code = require_string(rec, "lang", path, line);
    auto lang = parse_lang(code);
    if (!lang) fail_line(path, line, "unknown language code \"" + code + "\"");
    return *lang;
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

ordered_json parse_record(const std::string& line, const std::string& path, std::size_t lineno) {
    ordered_json rec = ordered_json::parse(line, nullptr, false);
    if (rec.is_discarded() || !rec.is_object()) {
        fail_line(path, lineno, "malformed JSON record");
    }
    return rec;
}

ordered_json pair_to_json(const ParallelPair& pair) {
    ordered_json rec;
    rec["id"] = pair.id;
    rec["lang"] = std::string(to_string(pair.lang));
    rec["toxic"] = pair.toxic;
    rec["references"] = pair.references;
    if (pair.split == Split::unsplit) {
        rec["split"] = nullptr;
    } else {
        rec["split"] = std::string(to_string(pair.split));
    }
    return rec;
}

ordered_json output_to_json(const SystemOutput& output) {
    ordered_json rec;
    rec["pair_id"] = output.pair_id;
    rec["lang"] = std::string(to_string(output.lang));
    rec["system"] = output.system;
    rec["detoxified"] = output.detoxified;
    if (!output.meta.is_null() && !output.meta.empty()) rec["meta"] = output.meta;
    return rec;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write file: " + path);
    out << content;
}

}  // namespace

std::string_view to_string(Split split) {
    switch (split) {
        case Split::train: return "train";
        case Split::test: return "test";
        case Split::unsplit: return "unsplit";
    }
    return "unsplit";
}

const ParallelPair* Corpus::find(const std::string& id) const {
    for (const auto& pair : pairs) {
        if (pair.id == id) return &pair;
    }
    return nullptr;
}

Corpus load_corpus(const std::string& path, Lang lang) {
    auto lines = read_lines(path);
    Corpus corpus;
    corpus.lang = lang;
    std::unordered_set<std::string> seen_ids;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t lineno = i + 1;
        if (lines[i].empty()) continue;
        ordered_json rec = parse_record(lines[i], path, lineno);

        ParallelPair pair;
        pair.id = require_string(rec, "id", path, lineno);
        pair.lang = require_lang(rec, path, lineno);
        if (pair.lang != lang) {
            fail_line(path, lineno,
                      "language mismatch: record is \"" + std::string(to_string(pair.lang)) +
                          "\", corpus declared \"" + std::string(to_string(lang)) + "\"");
        }
        pair.toxic = text::nfc(require_string(rec, "toxic", path, lineno));
        if (text::is_blank(pair.toxic)) fail_line(path, lineno, "empty toxic field");

        if (!rec.contains("references") || !rec["references"].is_array() ||
            rec["references"].empty()) {
            fail_line(path, lineno, "missing or empty \"references\" field");
        }
        for (const auto& ref : rec["references"]) {
            if (!ref.is_string()) fail_line(path, lineno, "non-string reference");
            std::string normalized = text::nfc(ref.get<std::string>());
            if (text::is_blank(normalized)) fail_line(path, lineno, "empty reference");
            pair.references.push_back(std::move(normalized));
        }

        if (rec.contains("split") && !rec["split"].is_null()) {
            std::string split = require_string(rec, "split", path, lineno);
            if (split == "train") {
                pair.split = Split::train;
            } else if (split == "test") {
                pair.split = Split::test;
            } else {
                fail_line(path, lineno, "unknown split \"" + split + "\"");
            }
        }

        if (!seen_ids.insert(pair.id).second) {
            fail_line(path, lineno, "duplicate pair id \"" + pair.id + "\"");
        }
        corpus.pairs.push_back(std::move(pair));
    }
    if (corpus.pairs.empty()) throw ValidationError(path + ": empty corpus");
    return corpus;
}

Corpus load_corpus(const std::string& path) {
    auto lines = read_lines(path);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        ordered_json rec = parse_record(lines[i], path, i + 1);
        return load_corpus(path, require_lang(rec, path, i + 1));
    }
    throw ValidationError(path + ": empty corpus");
}

std::string corpus_to_jsonl(const Corpus& corpus) {
    std::ostringstream out;
    for (const auto& pair : corpus.pairs) out << pair_to_json(pair).dump() << '\n';
    return out.str();
}

void write_corpus(const std::string& path, const Corpus& corpus) {
    write_file(path, corpus_to_jsonl(corpus));
}

std::vector<SystemOutput> load_outputs(const std::string& path) {
    auto lines = read_lines(path);
    std::vector<SystemOutput> outputs;
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t lineno = i + 1;
        if (lines[i].empty()) continue;
        ordered_json rec = parse_record(lines[i], path, lineno);

        SystemOutput output;
        output.pair_id = require_string(rec, "pair_id", path, lineno);
        output.lang = require_lang(rec, path, lineno);
        output.system = require_string(rec, "system", path, lineno);
        output.detoxified = text::nfc(require_string(rec, "detoxified", path, lineno));
        if (rec.contains("meta")) output.meta = rec["meta"];

        std::string key = output.pair_id + "\x1f" + output.system;
        if (!seen.insert(key).second) {
            fail_line(path, lineno,
                      "duplicate output for pair \"" + output.pair_id + "\" and system \"" +
                          output.system + "\"");
        }
        outputs.push_back(std::move(output));
    }
    return outputs;
}

std::string outputs_to_jsonl(const std::vector<SystemOutput>& outputs) {
    std::ostringstream out;
    for (const auto& output : outputs) out << output_to_json(output).dump() << '\n';
    return out.str();
}

void write_outputs(const std::string& path, const std::vector<SystemOutput>& outputs) {
    write_file(path, outputs_to_jsonl(outputs));
}

std::pair<Corpus, Corpus> split_corpus(const Corpus& corpus, std::size_t train_size,
                                       std::uint64_t seed) {
    if (train_size > corpus.pairs.size()) {
        throw ValidationError("train_size " + std::to_string(train_size) +
                              " exceeds corpus size " + std::to_string(corpus.pairs.size()));
    }
    std::vector<std::size_t> order(corpus.pairs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::mt19937_64 rng(seed);
    for (std::size_t i = order.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng() % i);
        std::swap(order[i - 1], order[j]);
    }

    Corpus train;
    train.lang = corpus.lang;
    Corpus test;
    test.lang = corpus.lang;
    for (std::size_t i = 0; i < order.size(); ++i) {
        ParallelPair pair = corpus.pairs[order[i]];
        pair.split = i < train_size ? Split::train : Split::test;
        (i < train_size ? train : test).pairs.push_back(std::move(pair));
    }
    return {std::move(train), std::move(test)};
}

}  // namespace detoxeval

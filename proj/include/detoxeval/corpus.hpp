#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "detoxeval/lang.hpp"

namespace detoxeval {

enum class Split { train, test, unsplit };

std::string_view to_string(Split split);

// One toxic sentence with its human detoxified reference(s).
struct ParallelPair {
    std::string id;
    Lang lang = Lang::en;
    std::string toxic;
    std::vector<std::string> references;
    Split split = Split::unsplit;
};

// One system's detoxified rewrite of a pair.
struct SystemOutput {
    std::string pair_id;
    Lang lang = Lang::en;
    std::string system;
    std::string detoxified;
    nlohmann::ordered_json meta;  // optional; audit payloads (pipeline intermediates, flags)
};

struct Corpus {
    Lang lang = Lang::en;
    std::vector<ParallelPair> pairs;

    const ParallelPair* find(const std::string& id) const;
};

// Line-delimited JSON loaders. Text fields are NFC-normalized on load and
// validated (non-empty toxic, non-empty references, unique ids). A record
// whose "lang" differs from the declared lang is an error.
Corpus load_corpus(const std::string& path, Lang lang);

// Infers the language from the first record, then delegates to load_corpus.
Corpus load_corpus(const std::string& path);

// Canonical serialization: stable key order, NFC text, one object per line.
std::string corpus_to_jsonl(const Corpus& corpus);
void write_corpus(const std::string& path, const Corpus& corpus);

std::vector<SystemOutput> load_outputs(const std::string& path);
std::string outputs_to_jsonl(const std::vector<SystemOutput>& outputs);
void write_outputs(const std::string& path, const std::vector<SystemOutput>& outputs);

// Seeded Fisher-Yates shuffle, then prefix split into (train, test).
std::pair<Corpus, Corpus> split_corpus(const Corpus& corpus, std::size_t train_size,
                                       std::uint64_t seed);

}  // namespace detoxeval

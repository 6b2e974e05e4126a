#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "mei/error.hpp"

// Triple ingestion and indexed storage. Files are UTF-8 TSV with one
// `head<TAB>relation<TAB>tail` triple per line, the format distributed
// with the WN18/FB15K benchmark family. Ids are dense and assigned in
// first-appearance order over train, then valid, then test, so a given
// set of files always produces the same vocabulary.

namespace mei {

struct Triple {
    std::int32_t h = 0;
    std::int32_t t = 0;
    std::int32_t r = 0;

    friend bool operator==(const Triple&, const Triple&) = default;
};

class Vocabulary {
public:
    std::int32_t intern_entity(const std::string& name) {
        auto it = entity_index_.find(name);
        if (it != entity_index_.end()) return it->second;
        auto id = static_cast<std::int32_t>(entity_names_.size());
        entity_names_.push_back(name);
        entity_index_.emplace(name, id);
        return id;
    }

    std::int32_t intern_relation(const std::string& name) {
        auto it = relation_index_.find(name);
        if (it != relation_index_.end()) return it->second;
        auto id = static_cast<std::int32_t>(relation_names_.size());
        relation_names_.push_back(name);
        relation_index_.emplace(name, id);
        return id;
    }

    // -1 when unknown.
    std::int32_t entity_id(const std::string& name) const {
        auto it = entity_index_.find(name);
        return it == entity_index_.end() ? -1 : it->second;
    }
    std::int32_t relation_id(const std::string& name) const {
        auto it = relation_index_.find(name);
        return it == relation_index_.end() ? -1 : it->second;
    }

    const std::string& entity_name(std::int32_t id) const { return entity_names_.at(id); }
    const std::string& relation_name(std::int32_t id) const { return relation_names_.at(id); }

    std::int32_t num_entities() const { return static_cast<std::int32_t>(entity_names_.size()); }
    std::int32_t num_relations() const { return static_cast<std::int32_t>(relation_names_.size()); }

    const std::vector<std::string>& entity_names() const { return entity_names_; }
    const std::vector<std::string>& relation_names() const { return relation_names_; }

private:
    std::vector<std::string> entity_names_;
    std::vector<std::string> relation_names_;
    std::unordered_map<std::string, std::int32_t> entity_index_;
    std::unordered_map<std::string, std::int32_t> relation_index_;
};

enum class Split { TRAIN, VALID, TEST };

inline const char* split_name(Split s) {
    switch (s) {
        case Split::TRAIN: return "train";
        case Split::VALID: return "valid";
        default: return "test";
    }
}

struct LoadReport {
    std::size_t duplicates_dropped = 0;
    // Entities/relations first seen outside the train split. They are
    // embedded like any other id but receive no training gradient.
    std::size_t entities_not_in_train = 0;
    std::size_t relations_not_in_train = 0;
};

// Indexed triple collection plus the candidate filter maps required by
// the filtered evaluation protocol. Immutable after construction; safe
// for concurrent reads.
class TripleStore {
public:
    TripleStore(Vocabulary vocab, std::vector<Triple> train, std::vector<Triple> valid,
                std::vector<Triple> test, LoadReport report = {})
        : vocab_(std::move(vocab)),
          train_(std::move(train)),
          valid_(std::move(valid)),
          test_(std::move(test)),
          report_(report) {
        rebuild_filters();
    }

    const Vocabulary& vocab() const { return vocab_; }
    const LoadReport& report() const { return report_; }

    const std::vector<Triple>& split(Split s) const {
        switch (s) {
            case Split::TRAIN: return train_;
            case Split::VALID: return valid_;
            default: return test_;
        }
    }

    std::int32_t num_entities() const { return vocab_.num_entities(); }
    std::int32_t num_relations() const { return vocab_.num_relations(); }
    bool inverse_augmented() const { return inverse_augmented_; }

    // All true tails of (h, r) over train+valid+test; empty when the
    // pair never occurs. Entries are sorted and unique.
    std::span<const std::int32_t> tail_candidates(std::int32_t h, std::int32_t r) const {
        return lookup(tail_filter_, pair_key(h, r));
    }

    // All true heads of (t, r) over train+valid+test.
    std::span<const std::int32_t> head_candidates(std::int32_t t, std::int32_t r) const {
        return lookup(head_filter_, pair_key(t, r));
    }

    // Tails of (h, r) restricted to the train split; this is what 1-N
    // training uses as positive labels so evaluation data never leaks.
    std::span<const std::int32_t> train_tails(std::int32_t h, std::int32_t r) const {
        return lookup(train_tail_, pair_key(h, r));
    }

    std::span<const std::int32_t> train_heads(std::int32_t t, std::int32_t r) const {
        return lookup(train_head_, pair_key(t, r));
    }

    bool contains(const Triple& triple) const {
        auto tails = tail_candidates(triple.h, triple.r);
        return std::binary_search(tails.begin(), tails.end(), triple.t);
    }

    // Distinct (h, r) training queries in first-appearance order, one
    // per pair regardless of how many tails it has.
    std::vector<std::pair<std::int32_t, std::int32_t>> train_tail_queries() const {
        std::vector<std::pair<std::int32_t, std::int32_t>> queries;
        std::unordered_set<std::int64_t> seen;
        for (const Triple& triple : train_)
            if (seen.insert(pair_key(triple.h, triple.r)).second)
                queries.emplace_back(triple.h, triple.r);
        return queries;
    }

    std::vector<std::pair<std::int32_t, std::int32_t>> train_head_queries() const {
        std::vector<std::pair<std::int32_t, std::int32_t>> queries;
        std::unordered_set<std::int64_t> seen;
        for (const Triple& triple : train_)
            if (seen.insert(pair_key(triple.t, triple.r)).second)
                queries.emplace_back(triple.t, triple.r);
        return queries;
    }

    // Doubles the relation set: for each (h, t, r) adds (t, h, r+|R|)
    // to the same split. The new relations are named `<name>_reverse`.
    void augment_inverse_relations() {
        if (inverse_augmented_)
            throw ConfigError("augment_inverse_relations: store is already augmented");
        const std::int32_t base = vocab_.num_relations();
        for (std::int32_t r = 0; r < base; ++r)
            vocab_.intern_relation(vocab_.relation_name(r) + "_reverse");
        for (auto* split : {&train_, &valid_, &test_}) {
            const std::size_t n = split->size();
            split->reserve(2 * n);
            for (std::size_t i = 0; i < n; ++i) {
                const Triple& triple = (*split)[i];
                split->push_back({triple.t, triple.h, triple.r + base});
            }
        }
        inverse_augmented_ = true;
        rebuild_filters();
    }

    // Writes one split back to TSV using vocabulary names, in stored
    // order; reloading the written files reproduces the same id-mapped
    // triples.
    void save_split(Split s, const std::string& path) const {
        std::ofstream out(path);
        if (!out) throw Error("cannot open for writing: " + path);
        for (const Triple& triple : split(s))
            out << vocab_.entity_name(triple.h) << '\t' << vocab_.relation_name(triple.r) << '\t'
                << vocab_.entity_name(triple.t) << '\n';
    }

    static std::int64_t pair_key(std::int32_t a, std::int32_t b) {
        return (static_cast<std::int64_t>(a) << 32) | static_cast<std::uint32_t>(b);
    }

private:
    using FilterMap = std::unordered_map<std::int64_t, std::vector<std::int32_t>>;

    static std::span<const std::int32_t> lookup(const FilterMap& map, std::int64_t key) {
        auto it = map.find(key);
        if (it == map.end()) return {};
        return it->second;
    }

    static void sort_unique(FilterMap& map) {
        for (auto& [key, ids] : map) {
            std::sort(ids.begin(), ids.end());
            ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        }
    }

    void rebuild_filters() {
        tail_filter_.clear();
        head_filter_.clear();
        train_tail_.clear();
        train_head_.clear();
        for (auto* split : {&train_, &valid_, &test_}) {
            for (const Triple& triple : *split) {
                tail_filter_[pair_key(triple.h, triple.r)].push_back(triple.t);
                head_filter_[pair_key(triple.t, triple.r)].push_back(triple.h);
            }
        }
        for (const Triple& triple : train_) {
            train_tail_[pair_key(triple.h, triple.r)].push_back(triple.t);
            train_head_[pair_key(triple.t, triple.r)].push_back(triple.h);
        }
        sort_unique(tail_filter_);
        sort_unique(head_filter_);
        sort_unique(train_tail_);
        sort_unique(train_head_);
    }

    Vocabulary vocab_;
    std::vector<Triple> train_;
    std::vector<Triple> valid_;
    std::vector<Triple> test_;
    LoadReport report_;
    bool inverse_augmented_ = false;
    FilterMap tail_filter_;
    FilterMap head_filter_;
    FilterMap train_tail_;
    FilterMap train_head_;
};

namespace detail {

struct RawTriple {
    std::string h, r, t;
};

inline std::vector<RawTriple> read_tsv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open dataset file: " + path);
    std::vector<RawTriple> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::size_t tab1 = line.find('\t');
        const std::size_t tab2 = tab1 == std::string::npos ? std::string::npos : line.find('\t', tab1 + 1);
        const bool extra = tab2 != std::string::npos && line.find('\t', tab2 + 1) != std::string::npos;
        if (tab1 == std::string::npos || tab2 == std::string::npos || extra || tab1 == 0 ||
            tab2 == tab1 + 1 || tab2 + 1 == line.size()) {
            std::ostringstream msg;
            msg << path << ":" << lineno << ": expected `head<TAB>relation<TAB>tail`";
            throw ParseError(msg.str());
        }
        rows.push_back({line.substr(0, tab1), line.substr(tab1 + 1, tab2 - tab1 - 1),
                        line.substr(tab2 + 1)});
    }
    return rows;
}

}  // namespace detail

// Loads the three split files, builds the vocabulary, and drops exact
// duplicate triples within a split (duplicates would distort loss
// weighting and the filter sets).
inline TripleStore load_dataset(const std::string& train_path, const std::string& valid_path,
                                const std::string& test_path) {
    Vocabulary vocab;
    LoadReport report;
    std::vector<std::vector<Triple>> splits(3);
    const std::string* paths[3] = {&train_path, &valid_path, &test_path};

    for (int s = 0; s < 3; ++s) {
        std::unordered_set<std::string> seen;
        for (const auto& row : detail::read_tsv(*paths[s])) {
            if (s > 0) {
                if (vocab.entity_id(row.h) < 0) ++report.entities_not_in_train;
                if (vocab.relation_id(row.r) < 0) ++report.relations_not_in_train;
                if (vocab.entity_id(row.t) < 0) ++report.entities_not_in_train;
            }
            Triple triple{vocab.intern_entity(row.h), vocab.intern_entity(row.t),
                          vocab.intern_relation(row.r)};
            std::string key = row.h + '\t' + row.r + '\t' + row.t;
            if (!seen.insert(std::move(key)).second) {
                ++report.duplicates_dropped;
                continue;
            }
            splits[s].push_back(triple);
        }
    }
    if (splits[0].empty()) throw Error("no training triples in " + train_path);
    return TripleStore(std::move(vocab), std::move(splits[0]), std::move(splits[1]),
                       std::move(splits[2]), report);
}

}  // namespace mei

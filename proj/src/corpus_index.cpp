#include "keylift/corpus_index.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <unordered_set>

#include "keylift/errors.hpp"

namespace keylift {

namespace {

constexpr char kMagic[4] = {'K', 'L', 'I', 'X'};
constexpr std::uint8_t kFormatVersion = 1;

void write_u32(std::ostream& out, std::uint32_t v) {
  const char bytes[4] = {
      static_cast<char>(v & 0xff),
      static_cast<char>((v >> 8) & 0xff),
      static_cast<char>((v >> 16) & 0xff),
      static_cast<char>((v >> 24) & 0xff),
  };
  out.write(bytes, 4);
}

std::uint32_t read_u32(std::istream& in) {
  unsigned char bytes[4];
  in.read(reinterpret_cast<char*>(bytes), 4);
  if (!in) throw IndexFormatError("truncated index file");
  return static_cast<std::uint32_t>(bytes[0]) | (static_cast<std::uint32_t>(bytes[1]) << 8) |
         (static_cast<std::uint32_t>(bytes[2]) << 16) |
         (static_cast<std::uint32_t>(bytes[3]) << 24);
}

void write_string(std::ostream& out, const std::string& s) {
  write_u32(out, static_cast<std::uint32_t>(s.size()));
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

std::string read_string(std::istream& in) {
  const std::uint32_t len = read_u32(in);
  std::string s(len, '\0');
  in.read(s.data(), static_cast<std::streamsize>(len));
  if (!in) throw IndexFormatError("truncated index file");
  return s;
}

}  // namespace

CorpusIndex CorpusIndex::build(const std::vector<TokenizedDocument>& docs) {
  if (docs.empty()) throw ParameterError("cannot build an index from zero documents");
  CorpusIndex index;
  std::unordered_set<std::string> seen;
  seen.reserve(docs.size());
  for (const auto& doc : docs) {
    if (!seen.insert(doc.doc_id).second) throw DuplicateDocIdError(doc.doc_id);
    const auto doc_no = static_cast<std::uint32_t>(index.doc_ids_.size());
    index.doc_ids_.push_back(doc.doc_id);
    index.doc_lengths_.push_back(static_cast<std::uint32_t>(doc.tokens.size()));
    for (std::size_t pos = 0; pos < doc.tokens.size(); ++pos) {
      auto& list = index.postings_[doc.tokens[pos]];
      if (list.empty() || list.back().doc != doc_no) list.push_back({doc_no, {}});
      list.back().positions.push_back(static_cast<std::uint32_t>(pos));
    }
  }
  return index;
}

const std::vector<CorpusIndex::Posting>* CorpusIndex::postings_for(const std::string& token) const {
  auto it = postings_.find(token);
  return it == postings_.end() ? nullptr : &it->second;
}

bool CorpusIndex::doc_has_phrase_at(const std::vector<const std::vector<Posting>*>& lists,
                                    std::uint32_t doc) {
  // lists[i] holds the postings of token i; the phrase matches when some
  // position p of token 0 has token i at p+i for every i.
  std::vector<const std::vector<std::uint32_t>*> positions(lists.size());
  for (std::size_t i = 0; i < lists.size(); ++i) {
    const auto& list = *lists[i];
    auto it = std::lower_bound(list.begin(), list.end(), doc,
                               [](const Posting& p, std::uint32_t d) { return p.doc < d; });
    if (it == list.end() || it->doc != doc) return false;
    positions[i] = &it->positions;
  }
  for (std::uint32_t start : *positions[0]) {
    bool match = true;
    for (std::size_t i = 1; i < positions.size(); ++i) {
      if (!std::binary_search(positions[i]->begin(), positions[i]->end(),
                              start + static_cast<std::uint32_t>(i))) {
        match = false;
        break;
      }
    }
    if (match) return true;
  }
  return false;
}

std::vector<std::uint32_t> CorpusIndex::matching_docs(const Phrase& p) const {
  std::vector<const std::vector<Posting>*> lists;
  lists.reserve(p.size());
  for (const auto& token : p.tokens()) {
    const auto* list = postings_for(token);
    if (list == nullptr) return {};
    lists.push_back(list);
  }
  std::vector<std::uint32_t> docs;
  if (lists.size() == 1) {
    docs.reserve(lists[0]->size());
    for (const auto& posting : *lists[0]) docs.push_back(posting.doc);
    return docs;
  }
  // Drive the scan from the rarest token's document list.
  std::size_t rarest = 0;
  for (std::size_t i = 1; i < lists.size(); ++i)
    if (lists[i]->size() < lists[rarest]->size()) rarest = i;
  for (const auto& posting : *lists[rarest])
    if (doc_has_phrase_at(lists, posting.doc)) docs.push_back(posting.doc);
  return docs;
}

std::uint32_t CorpusIndex::doc_frequency(const Phrase& p) const {
  if (p.size() == 1) {
    const auto* list = postings_for(p.tokens().front());
    return list == nullptr ? 0 : static_cast<std::uint32_t>(list->size());
  }
  return static_cast<std::uint32_t>(matching_docs(p).size());
}

std::uint32_t CorpusIndex::co_document_frequency(const Phrase& p, const Phrase& q) const {
  const auto docs_p = matching_docs(p);
  if (docs_p.empty()) return 0;
  const auto docs_q = matching_docs(q);
  std::size_t count = 0;
  auto it_p = docs_p.begin();
  auto it_q = docs_q.begin();
  while (it_p != docs_p.end() && it_q != docs_q.end()) {
    if (*it_p < *it_q) {
      ++it_p;
    } else if (*it_q < *it_p) {
      ++it_q;
    } else {
      ++count;
      ++it_p;
      ++it_q;
    }
  }
  return static_cast<std::uint32_t>(count);
}

void CorpusIndex::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write index file: " + path.string());
  out.write(kMagic, 4);
  out.put(static_cast<char>(kFormatVersion));
  write_string(out, fingerprint_);
  write_u32(out, static_cast<std::uint32_t>(doc_ids_.size()));
  for (std::size_t i = 0; i < doc_ids_.size(); ++i) {
    write_string(out, doc_ids_[i]);
    write_u32(out, doc_lengths_[i]);
  }
  // Tokens sorted so repeated builds write identical bytes.
  std::vector<const std::string*> tokens;
  tokens.reserve(postings_.size());
  for (const auto& [token, _] : postings_) tokens.push_back(&token);
  std::sort(tokens.begin(), tokens.end(),
            [](const std::string* a, const std::string* b) { return *a < *b; });
  write_u32(out, static_cast<std::uint32_t>(tokens.size()));
  for (const auto* token : tokens) {
    write_string(out, *token);
    const auto& list = postings_.at(*token);
    write_u32(out, static_cast<std::uint32_t>(list.size()));
    for (const auto& posting : list) {
      write_u32(out, posting.doc);
      write_u32(out, static_cast<std::uint32_t>(posting.positions.size()));
      for (std::uint32_t pos : posting.positions) write_u32(out, pos);
    }
  }
  if (!out) throw IoError("failed writing index file: " + path.string());
}

CorpusIndex CorpusIndex::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IndexFormatError("cannot open index file: " + path.string());
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kMagic, 4) != 0)
    throw IndexFormatError("not a keylift index: " + path.string());
  const int version = in.get();
  if (version != kFormatVersion)
    throw IndexFormatError("unsupported index format version " + std::to_string(version));
  CorpusIndex index;
  index.fingerprint_ = read_string(in);
  if (index.fingerprint_ != kNormalizationFingerprint)
    throw FingerprintMismatchError("index was built with normalization '" + index.fingerprint_ +
                                   "', this build uses '" + std::string(kNormalizationFingerprint) +
                                   "'");
  const std::uint32_t doc_count = read_u32(in);
  if (doc_count == 0) throw IndexFormatError("index holds zero documents");
  index.doc_ids_.reserve(doc_count);
  index.doc_lengths_.reserve(doc_count);
  for (std::uint32_t i = 0; i < doc_count; ++i) {
    index.doc_ids_.push_back(read_string(in));
    index.doc_lengths_.push_back(read_u32(in));
  }
  const std::uint32_t token_count = read_u32(in);
  index.postings_.reserve(token_count);
  for (std::uint32_t t = 0; t < token_count; ++t) {
    std::string token = read_string(in);
    const std::uint32_t n_docs = read_u32(in);
    std::vector<Posting> list;
    list.reserve(n_docs);
    for (std::uint32_t d = 0; d < n_docs; ++d) {
      Posting posting;
      posting.doc = read_u32(in);
      if (posting.doc >= doc_count) throw IndexFormatError("posting references unknown document");
      const std::uint32_t n_pos = read_u32(in);
      posting.positions.reserve(n_pos);
      for (std::uint32_t i = 0; i < n_pos; ++i) posting.positions.push_back(read_u32(in));
      list.push_back(std::move(posting));
    }
    index.postings_.emplace(std::move(token), std::move(list));
  }
  return index;
}

}  // namespace keylift

#include "keylift/similarity.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "keylift/corpus_index.hpp"
#include "keylift/errors.hpp"
#include "keylift/fixtures.hpp"
#include "keylift/phrase.hpp"
#include "keylift/text.hpp"
#include "support/oracles.hpp"

namespace keylift {
namespace {

TEST(PmiFromCounts, IndependenceIsExactlyZero) {
  // N=16, df=4, df=4, co=1: co*N == df*df, so the ratio is exactly 1.
  const auto s = pmi_from_counts(4, 4, 1, 16);
  ASSERT_EQ(s.kind, PmiScore::Kind::value);
  EXPECT_EQ(s.value, 0.0);
}

TEST(PmiFromCounts, SelfPmiIsNegLogProbability) {
  const auto s = pmi_from_counts(4, 4, 4, 16);
  ASSERT_EQ(s.kind, PmiScore::Kind::value);
  EXPECT_DOUBLE_EQ(s.value, 2.0);
}

TEST(PmiFromCounts, UndefinedIffEitherDfZero) {
  EXPECT_EQ(pmi_from_counts(0, 4, 0, 16).kind, PmiScore::Kind::undefined);
  EXPECT_EQ(pmi_from_counts(4, 0, 0, 16).kind, PmiScore::Kind::undefined);
  EXPECT_EQ(pmi_from_counts(0, 0, 0, 16).kind, PmiScore::Kind::undefined);
}

TEST(PmiFromCounts, FlooredIffAttestedButDisjoint) {
  const auto s = pmi_from_counts(4, 4, 0, 16);
  ASSERT_EQ(s.kind, PmiScore::Kind::floored);
  EXPECT_EQ(s.value, kDefaultPmiFloor);

  const auto custom = pmi_from_counts(4, 4, 0, 16, -3.5);
  EXPECT_EQ(custom.value, -3.5);
}

TEST(PmiFromCounts, MatchesOracleOnRandomCounts) {
  fixtures::Rng rng(31);
  for (int iter = 0; iter < 1000; ++iter) {
    const std::uint64_t n = 1 + rng.below(500);
    const std::uint64_t df_p = rng.below(n + 1);
    const std::uint64_t df_q = rng.below(n + 1);
    const std::uint64_t co = rng.below(std::min(df_p, df_q) + 1);
    const auto got = pmi_from_counts(df_p, df_q, co, n);
    const auto want = testsupport::oracle_pmi_from_counts(df_p, df_q, co, n, kDefaultPmiFloor);
    ASSERT_EQ(static_cast<int>(got.kind), static_cast<int>(want.kind))
        << df_p << " " << df_q << " " << co << " " << n;
    if (got.defined()) {
      ASSERT_EQ(got.value, want.value);
    }
  }
}

TEST(Pmi, FourDocHandExample) {
  // docs {"a b","a c","b c","d"}: df(a)=df(b)=2, co(a,b)=1, N=4 -> PMI 0.
  const auto index = CorpusIndex::build({
      tokenize_document("1", "a b"),
      tokenize_document("2", "a c"),
      tokenize_document("3", "b c"),
      tokenize_document("4", "d"),
  });
  const auto s = pmi(index, Phrase::parse("a"), Phrase::parse("b"));
  ASSERT_EQ(s.kind, PmiScore::Kind::value);
  EXPECT_EQ(s.value, 0.0);
}

TEST(Pmi, SymmetricExactly) {
  const auto docs = fixtures::count_oracle_corpus(17, 80);
  const auto index = CorpusIndex::build(docs);
  const auto vocab = fixtures::count_oracle_vocabulary();
  fixtures::Rng rng(41);
  for (int iter = 0; iter < 300; ++iter) {
    const Phrase p{{vocab[rng.below(vocab.size())]}};
    const Phrase q{{vocab[rng.below(vocab.size())], vocab[rng.below(vocab.size())]}};
    const auto pq = pmi(index, p, q);
    const auto qp = pmi(index, q, p);
    ASSERT_EQ(static_cast<int>(pq.kind), static_cast<int>(qp.kind));
    if (pq.defined()) {
      ASSERT_EQ(pq.value, qp.value);
    }
  }
}

TEST(Pmi, AgreesWithFullScanOracle) {
  const auto docs = fixtures::count_oracle_corpus(19, 100);
  const auto index = CorpusIndex::build(docs);
  const auto vocab = fixtures::count_oracle_vocabulary();
  fixtures::Rng rng(43);
  for (int iter = 0; iter < 300; ++iter) {
    std::vector<std::string> p{vocab[rng.below(vocab.size())]};
    std::vector<std::string> q{vocab[rng.below(vocab.size())]};
    if (rng.below(2) == 0) q.push_back(vocab[rng.below(vocab.size())]);
    const auto got = pmi(index, Phrase{p}, Phrase{q});
    const auto want = testsupport::oracle_pmi(docs, p, q, kDefaultPmiFloor);
    ASSERT_EQ(static_cast<int>(got.kind), static_cast<int>(want.kind));
    if (got.defined()) {
      ASSERT_EQ(got.value, want.value);
    }
  }
}

TEST(Pmi, IndependentByConstructionPairsScoreZero) {
  const auto docs = fixtures::independence_corpus(8, 8);
  const auto index = CorpusIndex::build(docs);
  for (std::size_t r = 0; r < 8; ++r) {
    for (std::size_t c = 0; c < 8; ++c) {
      const auto s = pmi(index, Phrase::parse("row" + std::to_string(r)),
                         Phrase::parse("col" + std::to_string(c)));
      ASSERT_EQ(s.kind, PmiScore::Kind::value);
      ASSERT_LE(std::abs(s.value), 1e-9);
    }
  }
}

// ---------------------------------------------------------------------------

std::vector<Phrase> phrases(const std::vector<std::string>& texts) {
  std::vector<Phrase> out;
  for (const auto& t : texts) out.push_back(Phrase::parse(t));
  return out;
}

TEST(SetSimilarity, SingletonSelfPair) {
  // df(p)=4 in a 16-doc corpus -> self-PMI 2.0 with a single pair.
  std::vector<TokenizedDocument> docs;
  for (int i = 0; i < 4; ++i)
    docs.push_back(tokenize_document("p" + std::to_string(i), "target filler"));
  for (int i = 0; i < 12; ++i)
    docs.push_back(tokenize_document("q" + std::to_string(i), "other text"));
  const auto index = CorpusIndex::build(docs);

  const auto set = phrases({"target"});
  const auto s = set_similarity(index, set, set);
  ASSERT_TRUE(s.defined());
  EXPECT_EQ(s.pair_count, 1u);
  EXPECT_EQ(s.undefined_pairs, 0u);
  EXPECT_DOUBLE_EQ(s.value, 2.0);
}

TEST(SetSimilarity, EmptySetThrows) {
  const auto index = CorpusIndex::build({tokenize_document("d", "a b")});
  const auto a = phrases({"a"});
  EXPECT_THROW(set_similarity(index, {}, a), ParameterError);
  EXPECT_THROW(set_similarity(index, a, {}), ParameterError);
}

TEST(SetSimilarity, MatchesBruteForcePairAverage) {
  const auto docs = fixtures::count_oracle_corpus(23, 60);
  const auto index = CorpusIndex::build(docs);
  const auto vocab = fixtures::count_oracle_vocabulary();
  fixtures::Rng rng(57);

  for (int iter = 0; iter < 60; ++iter) {
    std::vector<std::vector<std::string>> a, b;
    const auto na = 1 + rng.below(4);
    const auto nb = 1 + rng.below(4);
    for (std::uint64_t i = 0; i < na; ++i) a.push_back({vocab[rng.below(vocab.size())]});
    for (std::uint64_t i = 0; i < nb; ++i)
      b.push_back({vocab[rng.below(vocab.size())], vocab[rng.below(vocab.size())]});

    std::vector<Phrase> pa, pb;
    for (const auto& t : a) pa.emplace_back(t);
    for (const auto& t : b) pb.emplace_back(t);

    const auto got = set_similarity(index, pa, pb);
    const auto want = testsupport::oracle_set_similarity(docs, a, b, kDefaultPmiFloor);
    ASSERT_EQ(got.defined(), want.defined);
    ASSERT_EQ(got.undefined_pairs, want.undefined_pairs);
    ASSERT_EQ(got.pair_count + got.undefined_pairs, pa.size() * pb.size());
    if (got.defined()) {
      ASSERT_NEAR(got.value, want.value, 1e-12);
    }
  }
}

TEST(SetSimilarity, SymmetricAndPermutationInvariant) {
  const auto docs = fixtures::count_oracle_corpus(29, 60);
  const auto index = CorpusIndex::build(docs);
  const auto a = phrases({"fern", "moss", "stone"});
  const auto b = phrases({"river", "cloud"});

  const auto ab = set_similarity(index, a, b);
  const auto ba = set_similarity(index, b, a);
  EXPECT_EQ(ab.value, ba.value);
  EXPECT_EQ(ab.pair_count, ba.pair_count);

  const auto a_perm = phrases({"stone", "fern", "moss"});
  const auto perm = set_similarity(index, a_perm, b);
  EXPECT_EQ(ab.value, perm.value);
}

TEST(SetSimilarity, AbsentPhraseOnlyAddsUndefinedPairs) {
  const auto docs = fixtures::count_oracle_corpus(31, 60);
  const auto index = CorpusIndex::build(docs);
  const auto a = phrases({"fern", "moss"});
  const auto b = phrases({"river", "cloud", "stone"});

  const auto base = set_similarity(index, a, b);
  auto widened = a;
  widened.push_back(Phrase::parse("qqqunattested"));
  ASSERT_EQ(index.doc_frequency(widened.back()), 0u);

  const auto grown = set_similarity(index, widened, b);
  EXPECT_EQ(grown.value, base.value);
  EXPECT_EQ(grown.pair_count, base.pair_count);
  EXPECT_EQ(grown.undefined_pairs, base.undefined_pairs + b.size());
}

TEST(SetSimilarity, AllPairsUndefinedIsUndefined) {
  const auto index = CorpusIndex::build({tokenize_document("d", "a b c")});
  const auto s = set_similarity(index, phrases({"zzz"}), phrases({"a"}));
  EXPECT_FALSE(s.defined());
  EXPECT_EQ(s.pair_count, 0u);
  EXPECT_EQ(s.undefined_pairs, 1u);
}

TEST(SetSimilarity, RemovingBelowMeanElementStrictlyImproves) {
  const auto docs = fixtures::count_oracle_corpus(37, 80);
  const auto index = CorpusIndex::build(docs);
  const auto vocab = fixtures::count_oracle_vocabulary();
  fixtures::Rng rng(61);

  int tested = 0;
  for (int iter = 0; iter < 200 && tested < 50; ++iter) {
    std::vector<Phrase> a, b;
    for (int i = 0; i < 4; ++i) a.push_back(Phrase{{vocab[rng.below(vocab.size())]}});
    for (int i = 0; i < 3; ++i) b.push_back(Phrase{{vocab[rng.below(vocab.size())]}});

    const auto whole = set_similarity(index, a, b);
    // Every vocabulary token is attested, so all pairs are defined.
    ASSERT_EQ(whole.pair_count, a.size() * b.size());

    // Find an element of A whose own mean against B is strictly below the set mean.
    std::size_t victim = a.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      const std::vector<Phrase> one{a[i]};
      const auto own = set_similarity(index, one, b);
      if (own.value < whole.value) {
        victim = i;
        break;
      }
    }
    if (victim == a.size()) continue;  // all elements equal the mean

    std::vector<Phrase> reduced;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (i != victim) reduced.push_back(a[i]);
    const auto after = set_similarity(index, reduced, b);
    ASSERT_GT(after.value, whole.value);
    ++tested;
  }
  EXPECT_GE(tested, 50);
}

// ---------------------------------------------------------------------------

TEST(BestMatches, NonPositiveMaximaGiveEmptyLists) {
  // Row/column tokens are independent by construction: PMI exactly 0, which
  // is not strictly positive.
  const auto index = CorpusIndex::build(fixtures::independence_corpus(4, 4));
  const auto gold = phrases({"row0", "row1"});
  const auto extracted = phrases({"col0", "col1"});
  const auto table = best_matches(index, gold, extracted);
  ASSERT_EQ(table.size(), 2u);
  for (const auto& [g, matches] : table) EXPECT_TRUE(matches.empty());
}

TEST(BestMatches, UniquePositiveMaximum) {
  const auto index = CorpusIndex::build({
      tokenize_document("1", "gold buddy"),
      tokenize_document("2", "gold buddy"),
      tokenize_document("3", "gold stranger"),
      tokenize_document("4", "stranger loner"),
      tokenize_document("5", "filler"),
      tokenize_document("6", "filler"),
  });
  const auto table = best_matches(index, phrases({"gold"}), phrases({"stranger", "buddy"}));
  ASSERT_EQ(table.size(), 1u);
  EXPECT_EQ(table[0].first.text(), "gold");
  ASSERT_EQ(table[0].second.size(), 1u);
  // PMI(gold,buddy) = log2(2*6/(3*2)) = 1; PMI(gold,stranger) = log2(1*6/(3*2)) = 0.
  EXPECT_EQ(table[0].second[0].text(), "buddy");
}

TEST(BestMatches, TiesKeepExtractedInputOrder) {
  const auto index = CorpusIndex::build({
      tokenize_document("1", "gold left right"),
      tokenize_document("2", "gold left right"),
      tokenize_document("3", "filler"),
      tokenize_document("4", "filler"),
  });
  // PMI(gold,left) = PMI(gold,right) = log2(2*4/(2*2)) = 1 > 0: a tie.
  const auto t1 = best_matches(index, phrases({"gold"}), phrases({"left", "right"}));
  ASSERT_EQ(t1[0].second.size(), 2u);
  EXPECT_EQ(t1[0].second[0].text(), "left");
  EXPECT_EQ(t1[0].second[1].text(), "right");

  const auto t2 = best_matches(index, phrases({"gold"}), phrases({"right", "left"}));
  EXPECT_EQ(t2[0].second[0].text(), "right");
  EXPECT_EQ(t2[0].second[1].text(), "left");
}

}  // namespace
}  // namespace keylift

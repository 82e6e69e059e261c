#include "keylift/enhancer.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "keylift/corpus_index.hpp"
#include "keylift/errors.hpp"
#include "keylift/keyphrase.hpp"
#include "keylift/phrase.hpp"
#include "keylift/text.hpp"
#include "support/oracles.hpp"
#include "support/reference_lists.hpp"

namespace keylift {
namespace {

using testsupport::kBioDatabaseList;
using testsupport::kCateringList;
using testsupport::kHtmlConverterList;
using testsupport::kZebrafishList;
using testsupport::make_reference_list;
using testsupport::shuffled;
using testsupport::texts_of;

KeyphraseList plain_list(const std::vector<std::string>& texts) {
  KeyphraseList list;
  list.doc_id = "t";
  for (std::size_t i = 0; i < texts.size(); ++i) {
    Keyphrase k;
    k.phrase = Phrase::parse(texts[i]);
    k.extractor_rank = static_cast<std::uint32_t>(i + 1);
    list.keyphrases.push_back(std::move(k));
  }
  return list;
}

TEST(AnnotateHits, FillsDocFrequencies) {
  const std::vector<TokenizedDocument> docs = {
      tokenize_document("1", "kelp forest and kelp beds"),
      tokenize_document("2", "kelp drifting"),
      tokenize_document("3", "open water"),
  };
  const auto index = CorpusIndex::build(docs);
  const auto list = plain_list({"kelp", "kelp forest", "water", "plankton bloom"});
  const auto annotated = annotate_hits(list, index);

  ASSERT_EQ(annotated.size(), 4u);
  for (std::size_t i = 0; i < annotated.keyphrases.size(); ++i) {
    const auto& k = annotated.keyphrases[i];
    ASSERT_TRUE(k.hit_count.has_value());
    // Order preserved, counts equal an independent full scan.
    EXPECT_EQ(k.phrase.text(), list.keyphrases[i].phrase.text());
    EXPECT_EQ(*k.hit_count, testsupport::scan_df(docs, k.phrase.tokens()));
  }
  EXPECT_EQ(*annotated.keyphrases[0].hit_count, 2u);
  EXPECT_EQ(*annotated.keyphrases[1].hit_count, 1u);
  EXPECT_EQ(*annotated.keyphrases[3].hit_count, 0u);  // unseen phrase
  EXPECT_EQ(annotated.ordering, Ordering::informativeness);
}

TEST(AnnotateHits, EmptyListStaysEmpty) {
  const auto index = CorpusIndex::build({tokenize_document("1", "a")});
  EXPECT_EQ(annotate_hits(KeyphraseList{}, index).size(), 0u);
}

TEST(OrderByInformativeness, RestoresPublishedBioDatabaseOrder) {
  const auto reference = make_reference_list(kBioDatabaseList, "doc006");
  const auto sorted = order_by_informativeness(shuffled(reference, 1));
  EXPECT_EQ(texts_of(sorted), texts_of(reference));
  EXPECT_EQ(sorted.ordering, Ordering::informativeness);
}

TEST(OrderByInformativeness, RestoresPublishedHtmlConverterOrder) {
  const auto reference = make_reference_list(kHtmlConverterList, "doc040");
  const auto sorted = order_by_informativeness(shuffled(reference, 2));
  EXPECT_EQ(texts_of(sorted), texts_of(reference));
  EXPECT_EQ(texts_of(sorted).front(), "html");
  EXPECT_EQ(texts_of(sorted).back(), "exising latex code");
}

TEST(OrderByInformativeness, CountsNonIncreasing) {
  for (int seed = 0; seed < 8; ++seed) {
    const auto sorted =
        order_by_informativeness(shuffled(make_reference_list(kZebrafishList, "doc008"), seed));
    for (std::size_t i = 1; i < sorted.keyphrases.size(); ++i)
      ASSERT_GE(*sorted.keyphrases[i - 1].hit_count, *sorted.keyphrases[i].hit_count);
  }
}

TEST(OrderByInformativeness, EqualCountsKeepExtractorRankOrder) {
  auto list = plain_list({"m3", "m1", "m2"});
  list.keyphrases[0].extractor_rank = 3;
  list.keyphrases[1].extractor_rank = 1;
  list.keyphrases[2].extractor_rank = 2;
  for (auto& k : list.keyphrases) k.hit_count = 7;
  const auto sorted = order_by_informativeness(list);
  EXPECT_EQ(texts_of(sorted), (std::vector<std::string>{"m1", "m2", "m3"}));
}

TEST(OrderByInformativeness, IsAPermutation) {
  const auto reference = make_reference_list(kCateringList, "doc016");
  const auto input = shuffled(reference, 3);
  const auto sorted = order_by_informativeness(input);
  auto a = texts_of(input);
  auto b = texts_of(sorted);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  EXPECT_EQ(a, b);
}

TEST(OrderByInformativeness, MissingHitCountThrows) {
  auto list = plain_list({"a", "b"});
  list.keyphrases[0].hit_count = 1;  // second entry unannotated
  EXPECT_THROW(order_by_informativeness(list), ParameterError);
}

// ---------------------------------------------------------------------------

TEST(PruneThreshold, RemovesOnlyTheZeroCountStragglerFromHtmlList) {
  const auto list = make_reference_list(kHtmlConverterList, "doc040");
  const auto pruned = prune_threshold(list, 100);
  auto want = texts_of(kHtmlConverterList);
  want.pop_back();  // "exising latex code" (0) is the only entry below 100
  EXPECT_EQ(texts_of(pruned), want);
  // The borderline survivors sit just above the cut.
  EXPECT_EQ(texts_of(pruned)[13], "html formatting commands");  // 103 hits
  EXPECT_EQ(texts_of(pruned)[12], "html modes");                // 112 hits
}

TEST(PruneThreshold, RemovesTheThreeZeroCountEntriesFromBioList) {
  const auto list = make_reference_list(kBioDatabaseList, "doc006");
  const auto pruned = prune_threshold(list, 100);
  EXPECT_EQ(pruned.size(), 12u);
  for (const auto& k : pruned.keyphrases) {
    EXPECT_NE(k.phrase.text(), "pioneer molecular biology");
    EXPECT_NE(k.phrase.text(), "premier swissprot");
    EXPECT_NE(k.phrase.text(), "expasy needs");
    EXPECT_GE(*k.hit_count, 100u);
  }
}

TEST(PruneThreshold, MinZeroIsIdentity) {
  const auto list = make_reference_list(kZebrafishList, "doc008");
  EXPECT_EQ(texts_of(prune_threshold(list, 0)), texts_of(list));
}

TEST(PruneThreshold, Idempotent) {
  const auto list = make_reference_list(kZebrafishList, "doc008");
  const auto once = prune_threshold(list, 100);
  const auto twice = prune_threshold(once, 100);
  EXPECT_EQ(texts_of(once), texts_of(twice));
}

TEST(PruneThreshold, EmptiedListCarriesWarning) {
  auto list = plain_list({"a", "b"});
  for (auto& k : list.keyphrases) k.hit_count = 3;
  const auto pruned = prune_threshold(list, 100);
  EXPECT_EQ(pruned.size(), 0u);
  EXPECT_FALSE(pruned.warning.empty());
}

TEST(PruneThreshold, AlwaysDropsZeroHitOutliers) {
  // A malformed phrase never attested in the corpus is exactly what the
  // threshold heuristic is for.
  for (int seed = 0; seed < 6; ++seed) {
    auto list = shuffled(make_reference_list(kZebrafishList, "doc008"), seed);
    const auto pruned = prune_threshold(list, 100);
    for (const auto& k : pruned.keyphrases) ASSERT_NE(k.phrase.text(), "nosibork");
  }
}

// ---------------------------------------------------------------------------

TEST(PruneLeastFrequent, DropsTheFiveRarestZebrafishPhrases) {
  const auto list = make_reference_list(kZebrafishList, "doc008");
  const auto pruned = prune_least_frequent(list, 5);
  const std::vector<std::string> want = {
      "fish",   "oregon",       "biology",   "molecular",        "genetics",
      "aquarium", "model system", "zebrafish", "molecular data", "brachydanio rerio"};
  EXPECT_EQ(texts_of(pruned), want);
}

TEST(PruneLeastFrequent, TieDropsLargerExtractorRankFirst) {
  // "gilbert lab home" (rank 13) and "zebrafish servers" (rank 14) both
  // count 2; with n=2 only the larger rank goes, after "nosibork" (0).
  const auto list = make_reference_list(kZebrafishList, "doc008");
  const auto pruned = prune_least_frequent(list, 2);
  const auto texts = texts_of(pruned);
  EXPECT_EQ(std::count(texts.begin(), texts.end(), "nosibork"), 0);
  EXPECT_EQ(std::count(texts.begin(), texts.end(), "zebrafish servers"), 0);
  EXPECT_EQ(std::count(texts.begin(), texts.end(), "gilbert lab home"), 1);
}

TEST(PruneLeastFrequent, SizeLawAndBoundaries) {
  const auto list = make_reference_list(kBioDatabaseList, "doc006");
  EXPECT_EQ(texts_of(prune_least_frequent(list, 0)), texts_of(list));
  for (std::size_t n : {1u, 5u, 14u}) {
    EXPECT_EQ(prune_least_frequent(list, n).size(), list.size() - n);
  }
  const auto emptied = prune_least_frequent(list, list.size());
  EXPECT_EQ(emptied.size(), 0u);
  EXPECT_FALSE(emptied.warning.empty());
  EXPECT_EQ(prune_least_frequent(list, 99).size(), 0u);
}

TEST(PruneLeastFrequent, OrderOfSurvivorsPreserved) {
  const auto input = shuffled(make_reference_list(kCateringList, "doc016"), 4);
  const auto pruned = prune_least_frequent(input, 5);
  // Survivors appear in the same relative order as in the input.
  const auto in_texts = texts_of(input);
  const auto out_texts = texts_of(pruned);
  std::size_t cursor = 0;
  for (const auto& t : in_texts) {
    if (cursor < out_texts.size() && t == out_texts[cursor]) ++cursor;
  }
  EXPECT_EQ(cursor, out_texts.size());
}

// ---------------------------------------------------------------------------

TEST(PruneExtremes, DropsRarestThreeAndCommonestTwoFromCateringList) {
  const auto list = make_reference_list(kCateringList, "doc016");
  const auto pruned = prune_extremes(list, 3, 2);
  const std::vector<std::string> want = {
      "christmas", "catering",     "cigar",        "malt",     "los gatos",
      "upcoming events", "libation", "single malt", "malt whisky", "single malt whiskies"};
  EXPECT_EQ(texts_of(pruned), want);
}

TEST(PruneExtremes, ZeroZeroIsIdentity) {
  const auto list = make_reference_list(kBioDatabaseList, "doc006");
  EXPECT_EQ(texts_of(prune_extremes(list, 0, 0)), texts_of(list));
}

TEST(PruneExtremes, ExactCoverEmptiesTheList) {
  auto list = plain_list({"a", "b", "c", "d", "e"});
  const std::vector<std::uint64_t> counts = {50, 40, 30, 20, 10};
  for (std::size_t i = 0; i < counts.size(); ++i) list.keyphrases[i].hit_count = counts[i];
  EXPECT_EQ(prune_extremes(list, 3, 2).size(), 0u);
}

TEST(PruneExtremes, OverfullPoolsThrow) {
  auto list = plain_list({"a", "b", "c"});
  for (auto& k : list.keyphrases) k.hit_count = 1;
  EXPECT_THROW(prune_extremes(list, 2, 2), ParameterError);
}

TEST(PruneExtremes, EntryInBothPoolsRemovedOnceAgainstLow) {
  // All counts equal: every entry qualifies for both pools. With low=3 and
  // high=1 on four entries the low pool takes three and the high pool takes
  // the remaining one; 3+1 = 4 is legal and the result is empty, which is
  // only possible if nothing was double-counted.
  auto list = plain_list({"a", "b", "c", "d"});
  for (auto& k : list.keyphrases) k.hit_count = 9;
  const auto pruned = prune_extremes(list, 3, 1);
  EXPECT_EQ(pruned.size(), 0u);
}

TEST(PruneExtremes, SizeLawWhenPoolsDisjoint) {
  const auto list = make_reference_list(kHtmlConverterList, "doc040");
  EXPECT_EQ(prune_extremes(list, 3, 2).size(), list.size() - 5);
  EXPECT_EQ(prune_extremes(list, 1, 1).size(), list.size() - 2);
}

TEST(PruneOps, RequireHitCounts) {
  const auto bare = plain_list({"a", "b", "c"});
  EXPECT_THROW(prune_threshold(bare, 100), ParameterError);
  EXPECT_THROW(prune_least_frequent(bare, 1), ParameterError);
  EXPECT_THROW(prune_extremes(bare, 1, 1), ParameterError);
}

}  // namespace
}  // namespace keylift

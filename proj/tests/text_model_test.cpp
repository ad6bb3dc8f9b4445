#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "metrix/metrix.hpp"
#include "support/fixtures.hpp"

namespace {

using fixtures::ConlluBuilder;
using metrix::Upos;

const char* kTwoSentences =
    "1\tHola\thola\tINTJ\t_\t_\t0\troot\t_\t_\n"
    "2\tmundo\tmundo\tNOUN\t_\tNumber=Sing\t1\tnsubj\t_\t_\n"
    "3\t.\t.\tPUNCT\t_\t_\t1\tpunct\t_\t_\n"
    "\n"
    "1\tAdiós\tadiós\tINTJ\t_\t_\t0\troot\t_\t_\n"
    "2\t.\t.\tPUNCT\t_\t_\t1\tpunct\t_\t_\n";

TEST(Conllu, BlankLineSeparatesSentencesNotParagraphs) {
  auto doc = metrix::ingest_conllu(kTwoSentences, "d");
  ASSERT_EQ(doc.sentences.size(), 2u);
  ASSERT_EQ(doc.paragraphs.size(), 1u);
  EXPECT_EQ(doc.paragraphs[0].size(), 2u);
}

TEST(Conllu, NewparStartsParagraph) {
  std::string text = kTwoSentences;
  text.insert(text.find("1\tAdiós"), "# newpar\n");
  auto doc = metrix::ingest_conllu(text, "d");
  ASSERT_EQ(doc.paragraphs.size(), 2u);
  EXPECT_EQ(doc.paragraphs[1].first, 1u);
  EXPECT_EQ(doc.paragraphs[1].last, 2u);
}

TEST(Conllu, NineColumnsIsMalformed) {
  EXPECT_THROW(metrix::ingest_conllu("1\tHola\thola\tINTJ\t_\t_\t0\troot\t_\n", "d"),
               metrix::MalformedConllu);
}

TEST(Conllu, MalformedReportsLine) {
  std::string text = std::string(kTwoSentences) + "\n1\tx\tx\tX\t_\t_\t7\tdep\t_\t_\n";
  try {
    metrix::ingest_conllu(text, "d");
    FAIL() << "expected MalformedConllu";
  } catch (const metrix::MalformedConllu& e) {
    EXPECT_EQ(e.line_no(), 8u);
  }
}

TEST(Conllu, SkipsMultiwordAndEmptyNodes) {
  auto doc = metrix::ingest_conllu(
      "1-2\tdel\t_\t_\t_\t_\t_\t_\t_\t_\n"
      "1\tde\tde\tADP\t_\t_\t2\tcase\t_\t_\n"
      "2\tel\tel\tDET\t_\t_\t0\troot\t_\t_\n"
      "2.1\tx\tx\tX\t_\t_\t_\t_\t_\t_\n",
      "d");
  EXPECT_EQ(doc.sentences[0].tokens.size(), 2u);
}

TEST(Conllu, TokenFieldsAndDerivedFlags) {
  auto doc = metrix::ingest_conllu(
      "1\tCasas\tcasa\tNOUN\t_\tGender=Fem|Number=Plur\t0\troot\t_\t_\n"
      "2\t,\t,\tPUNCT\t_\t_\t1\tpunct\t_\t_\n"
      "3\tacl\tx\tVERB\t_\t_\t1\tacl:relcl\t_\t_\n",
      "d");
  const auto& t = doc.sentences[0].tokens;
  EXPECT_EQ(t[0].upos, Upos::NOUN);
  EXPECT_EQ(t[0].morph.get("Number"), "Plur");
  EXPECT_TRUE(t[0].is_root());
  EXPECT_TRUE(t[0].is_content_word);
  EXPECT_EQ(t[0].syllables, 2);
  EXPECT_FALSE(t[1].is_alphanumeric);
  EXPECT_EQ(t[2].head, 0);
  EXPECT_EQ(t[2].base_deprel(), "acl");
}

TEST(Conllu, MultipleRootsAreRepaired) {
  auto doc = metrix::ingest_conllu(
      "1\tel\tel\tDET\t_\t_\t0\troot\t_\t_\n"
      "2\tperro\tperro\tNOUN\t_\t_\t0\troot\t_\t_\n"
      "3\tcorre\tcorrer\tVERB\t_\t_\t0\troot\t_\t_\n",
      "d");
  const auto& s = doc.sentences[0];
  EXPECT_EQ(s.root(), 2u);
  int roots = 0;
  for (const auto& t : s.tokens) roots += t.is_root();
  EXPECT_EQ(roots, 1);
}

TEST(Conllu, NoWordsIsEmptyDocument) {
  EXPECT_THROW(metrix::ingest_conllu("", "d"), metrix::EmptyDocument);
  EXPECT_THROW(metrix::ingest_conllu("1\t.\t.\tPUNCT\t_\t_\t0\troot\t_\t_\n", "d"),
               metrix::EmptyDocument);
}

TEST(Conllu, RoundTripsRandomDocuments) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    auto doc = fixtures::random_document(rng);
    auto again = metrix::ingest_conllu(metrix::to_conllu(doc), doc.source_id);
    EXPECT_EQ(doc, again);
  }
}

TEST(Features, MultiValuedHas) {
  metrix::Features f;
  f.set("PronType", "Int,Rel");
  f.set("Case", "Nom");
  EXPECT_TRUE(f.has("PronType", "Rel"));
  EXPECT_TRUE(f.has("PronType", "Int"));
  EXPECT_FALSE(f.has("PronType", "Re"));
  EXPECT_EQ(f.entries().front().first, "Case");
}

TEST(Syllables, SpecExamples) {
  EXPECT_EQ(metrix::syllabify("mi"), 1);
  EXPECT_EQ(metrix::syllabify("ejemplo"), 3);
  EXPECT_EQ(metrix::syllabify("país"), 2);
}

TEST(Syllables, DiphthongsHiatusAndY) {
  EXPECT_EQ(metrix::syllabify("Este"), 2);
  EXPECT_EQ(metrix::syllabify("es"), 1);
  EXPECT_EQ(metrix::syllabify("ciudad"), 2);   // ciu-dad
  EXPECT_EQ(metrix::syllabify("poeta"), 3);    // po-e-ta
  EXPECT_EQ(metrix::syllabify("día"), 2);      // dí-a
  EXPECT_EQ(metrix::syllabify("buey"), 1);     // triphthong with final y
  EXPECT_EQ(metrix::syllabify("yema"), 2);
  EXPECT_EQ(metrix::syllabify("ahora"), 3);    // a-ho-ra
  EXPECT_EQ(metrix::syllabify("organización"), 5);
  EXPECT_EQ(metrix::syllabify("MURCIÉLAGO"), 4);
  EXPECT_EQ(metrix::syllabify("sr"), 1);
  EXPECT_EQ(metrix::syllabify("..."), 0);
}

TEST(Utf8, FoldCaseHandlesAccents) {
  EXPECT_EQ(metrix::utf8::fold_case("ÁRBOL Ñandú"), "árbol ñandú");
  EXPECT_EQ(metrix::utf8::count_alnum("co-op"), 4u);
  EXPECT_TRUE(metrix::utf8::has_alnum("¡Sí!"));
  EXPECT_FALSE(metrix::utf8::has_alnum("¡!"));
}

TEST(Utf8, InvalidBytesBecomeReplacement) {
  auto cps = metrix::utf8::decode("a\xffz");
  ASSERT_EQ(cps.size(), 3u);
  EXPECT_EQ(cps[1], metrix::utf8::kReplacement);
}

// Splits on spaces and detaches a final period; one sentence per period.
class EchoAnnotator : public metrix::Annotator {
 public:
  std::string annotate(std::string_view raw) override {
    std::istringstream in{std::string(raw)};
    std::string word, out;
    int id = 0;
    auto emit = [&](const std::string& form, const char* upos) {
      ++id;
      out += std::to_string(id) + "\t" + form + "\t" + form + "\t" + upos + "\t_\t_\t" +
             (id == 1 ? "0\troot" : "1\tdep") + "\t_\t_\n";
    };
    while (in >> word) {
      bool stop = word.back() == '.';
      if (stop) word.pop_back();
      if (!word.empty()) emit(word, "X");
      if (stop) {
        emit(".", "PUNCT");
        out += "\n";
        id = 0;
      }
    }
    return out;
  }
};

TEST(Annotate, StubAnnotatorSentence) {
  EchoAnnotator a;
  auto doc = metrix::annotate("Hola mundo.", a);
  ASSERT_EQ(doc.paragraphs.size(), 1u);
  ASSERT_EQ(doc.sentences.size(), 1u);
  EXPECT_EQ(doc.sentences[0].tokens.size(), 3u);
}

TEST(Annotate, EmptyRawIsEmptyDocument) {
  EchoAnnotator a;
  EXPECT_THROW(metrix::annotate("", a), metrix::EmptyDocument);
}

TEST(Annotate, BlankLineSeparatesParagraphs) {
  EchoAnnotator a;
  auto doc = metrix::annotate("A.\n\nB.", a);
  EXPECT_EQ(doc.paragraphs.size(), 2u);
  EXPECT_EQ(doc.sentences.size(), 2u);
}

class ThrowingAnnotator : public metrix::Annotator {
 public:
  std::string annotate(std::string_view) override { throw std::runtime_error("boom"); }
};

TEST(Annotate, FailuresAreWrapped) {
  ThrowingAnnotator a;
  EXPECT_THROW(metrix::annotate("Hola.", a), metrix::AnnotatorFailure);
}

TEST(Annotate, RuleBasedAnnotatorProducesParsableOutput) {
  metrix::RuleBasedAnnotator a;
  auto doc = metrix::annotate("El perro corre rápidamente. ¿Vienes mañana?\n\nNo sé.", a);
  EXPECT_EQ(doc.paragraphs.size(), 2u);
  EXPECT_EQ(doc.sentences.size(), 3u);
  EXPECT_EQ(metrix::word_count(doc), 8u);
}

TEST(Annotate, CommandAnnotatorRunsExternalProcess) {
  // `cat` echoes CoNLL-U given as raw input.
  metrix::CommandAnnotator a("cat");
  auto doc = metrix::annotate("1\tHola\thola\tINTJ\t_\t_\t0\troot\t_\t_", a);
  EXPECT_EQ(doc.sentences[0].tokens[0].lemma, "hola");
  metrix::CommandAnnotator bad("exit 3");
  EXPECT_THROW(metrix::annotate("Hola.", bad), metrix::AnnotatorFailure);
}

}  // namespace

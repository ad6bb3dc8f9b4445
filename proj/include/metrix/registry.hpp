// Static catalog of every metric: code, category, description, unit and
// the module that computes it. Catalog order is the canonical column order
// of every output format.
#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "metrix/error.hpp"
#include "metrix/utf8.hpp"

namespace metrix {

enum class Category {
  kDescriptive,
  kReadability,
  kReferentialCohesion,
  kLexicalDiversity,
  kWordFrequency,
  kSemanticCohesion,
  kSyntacticComplexity,
  kPatternDensity,
  kConnectives,
  kWordInformation,
  kPsycholinguistics,
  kTextualSimplicity,
};

inline constexpr std::size_t kCategoryCount = 12;

inline constexpr std::array<std::string_view, kCategoryCount> kCategoryNames = {
    "Descriptive",          "Readability",       "Referential Cohesion",
    "Lexical Diversity",    "Word Frequency",    "Semantic Cohesion",
    "Syntactic Complexity", "Pattern Density",   "Connectives",
    "Word Information",     "Psycholinguistics", "Textual Simplicity"};

inline constexpr std::string_view category_name(Category c) {
  return kCategoryNames[static_cast<std::size_t>(c)];
}

// Accepts the display name case-insensitively, with spaces, '-' or '_'
// between words ("word-frequency", "Word Frequency").
inline Category parse_category(std::string_view name) {
  auto normalize = [](std::string_view s) {
    std::string out;
    for (char c : utf8::fold_case(s))
      if (c != ' ' && c != '-' && c != '_') out += c;
    return out;
  };
  std::string key = normalize(name);
  for (std::size_t i = 0; i < kCategoryNames.size(); ++i)
    if (normalize(kCategoryNames[i]) == key) return static_cast<Category>(i);
  throw UnknownCategory(std::string(name));
}

enum class Unit { kCount, kIncidencePer1000, kRatio, kIndex, kDistance };

inline constexpr std::string_view unit_name(Unit u) {
  switch (u) {
    case Unit::kCount: return "count";
    case Unit::kIncidencePer1000: return "incidence_per_1000";
    case Unit::kRatio: return "ratio";
    case Unit::kIndex: return "index";
    case Unit::kDistance: return "distance";
  }
  return "";
}

struct MetricDescriptor {
  std::string_view code;
  Category category;
  std::string_view description;
  Unit unit;
  std::string_view module;
};

namespace catalog {

using C = Category;
using U = Unit;
inline constexpr std::string_view kSurface = "surface-metrics";
inline constexpr std::string_view kDiversity = "lexical-diversity";
inline constexpr std::string_view kReadability = "readability";
inline constexpr std::string_view kSyntax = "syntax-metrics";
inline constexpr std::string_view kCohesion = "cohesion";
inline constexpr std::string_view kPsycho = "psycholinguistics";
inline constexpr std::string_view kFrequency = "word-frequency";
inline constexpr std::string_view kConnectives = "connectives";

inline constexpr std::array<MetricDescriptor, 182> kMetrics = {{
    // Descriptive
    {"DESPC", C::kDescriptive, "Paragraph count", U::kCount, kSurface},
    {"DESPCi", C::kDescriptive, "Paragraph count incidence per 1000 words", U::kIncidencePer1000, kSurface},
    {"DESSC", C::kDescriptive, "Sentence count", U::kCount, kSurface},
    {"DESSCi", C::kDescriptive, "Sentence count incidence per 1000 words", U::kIncidencePer1000, kSurface},
    {"DESWC", C::kDescriptive, "Word count (alphanumeric words)", U::kCount, kSurface},
    {"DESWCU", C::kDescriptive, "Unique word count", U::kCount, kSurface},
    {"DESWCUi", C::kDescriptive, "Unique word count incidence per 1000 words", U::kIncidencePer1000, kSurface},
    {"DESPL", C::kDescriptive, "Average paragraph length (sentences per paragraph)", U::kIndex, kSurface},
    {"DESPLd", C::kDescriptive, "Standard deviation of paragraph length", U::kIndex, kSurface},
    {"DESSL", C::kDescriptive, "Average sentence length (words per sentence)", U::kIndex, kSurface},
    {"DESSLd", C::kDescriptive, "Standard deviation of sentence length", U::kIndex, kSurface},
    {"DESSNSL", C::kDescriptive, "Average sentence length excluding stopwords", U::kIndex, kSurface},
    {"DESSNSLd", C::kDescriptive, "Standard deviation of sentence length excluding stopwords", U::kIndex, kSurface},
    {"DESSLmax", C::kDescriptive, "Maximum sentence length", U::kCount, kSurface},
    {"DESSLmin", C::kDescriptive, "Minimum sentence length", U::kCount, kSurface},
    {"DESWLsy", C::kDescriptive, "Average syllables per word", U::kIndex, kSurface},
    {"DESWLsyd", C::kDescriptive, "Standard deviation of syllables per word", U::kIndex, kSurface},
    {"DESCWLsy", C::kDescriptive, "Average syllables per content word", U::kIndex, kSurface},
    {"DESCWLsyd", C::kDescriptive, "Standard deviation of syllables per content word", U::kIndex, kSurface},
    {"DESCWLlt", C::kDescriptive, "Average letters per content word", U::kIndex, kSurface},
    {"DESCWLltd", C::kDescriptive, "Standard deviation of letters per content word", U::kIndex, kSurface},
    {"DESWLlt", C::kDescriptive, "Average letters per word", U::kIndex, kSurface},
    {"DESWLltd", C::kDescriptive, "Standard deviation of letters per word", U::kIndex, kSurface},
    {"DESWNSLlt", C::kDescriptive, "Average letters per word (excluding stopwords)", U::kIndex, kSurface},
    {"DESWNSLltd", C::kDescriptive, "Standard deviation of letters per word (excluding stopwords)", U::kIndex, kSurface},
    {"DESLLlt", C::kDescriptive, "Average letters per lemma", U::kIndex, kSurface},
    {"DESLLltd", C::kDescriptive, "Standard deviation of letters per lemma", U::kIndex, kSurface},
    // Readability
    {"RDFHGL", C::kReadability, "Fernandez-Huertas Grade Level", U::kIndex, kReadability},
    {"RDSPP", C::kReadability, "Szigriszt-Pazos Perspicuity", U::kIndex, kReadability},
    {"RDMU", C::kReadability, "Readability mu index", U::kIndex, kReadability},
    {"RDSMOG", C::kReadability, "SMOG index", U::kIndex, kReadability},
    {"RDFOG", C::kReadability, "Gunning Fog index", U::kIndex, kReadability},
    {"RDHS", C::kReadability, "Honore Statistic", U::kIndex, kReadability},
    {"RDBR", C::kReadability, "Brunet index", U::kIndex, kReadability},
    // Referential cohesion
    {"CRFNO1", C::kReferentialCohesion, "Noun overlap between adjacent sentences", U::kRatio, kCohesion},
    {"CRFAO1", C::kReferentialCohesion, "Argument overlap between adjacent sentences", U::kRatio, kCohesion},
    {"CRFSO1", C::kReferentialCohesion, "Stem overlap between adjacent sentences", U::kRatio, kCohesion},
    {"CRFCWO1", C::kReferentialCohesion, "Content word overlap between adjacent sentences (mean)", U::kRatio, kCohesion},
    {"CRFCWO1d", C::kReferentialCohesion, "Content word overlap between adjacent sentences (std dev)", U::kRatio, kCohesion},
    {"CRFANP1", C::kReferentialCohesion, "Anaphor overlap between adjacent sentences", U::kRatio, kCohesion},
    {"CRFNOa", C::kReferentialCohesion, "Noun overlap between all sentences", U::kRatio, kCohesion},
    {"CRFAOa", C::kReferentialCohesion, "Argument overlap between all sentences", U::kRatio, kCohesion},
    {"CRFSOa", C::kReferentialCohesion, "Stem overlap between all sentences", U::kRatio, kCohesion},
    {"CRFCWOa", C::kReferentialCohesion, "Content word overlap between all sentences (mean)", U::kRatio, kCohesion},
    {"CRFCWOad", C::kReferentialCohesion, "Content word overlap between all sentences (std dev)", U::kRatio, kCohesion},
    {"CRFANPa", C::kReferentialCohesion, "Anaphor overlap between all sentences", U::kRatio, kCohesion},
    // Lexical diversity
    {"LDTTRa", C::kLexicalDiversity, "Type-token ratio for all words", U::kRatio, kDiversity},
    {"LDTTRcw", C::kLexicalDiversity, "Type-token ratio for content words", U::kRatio, kDiversity},
    {"LDTTRno", C::kLexicalDiversity, "Type-token ratio for nouns", U::kRatio, kDiversity},
    {"LDTTRvb", C::kLexicalDiversity, "Type-token ratio for verbs", U::kRatio, kDiversity},
    {"LDTTRadv", C::kLexicalDiversity, "Type-token ratio for adverbs", U::kRatio, kDiversity},
    {"LDTTRadj", C::kLexicalDiversity, "Type-token ratio for adjectives", U::kRatio, kDiversity},
    {"LDTTRLa", C::kLexicalDiversity, "Type-token ratio for all lemmas", U::kRatio, kDiversity},
    {"LDTTRLno", C::kLexicalDiversity, "Type-token ratio for noun lemmas", U::kRatio, kDiversity},
    {"LDTTRLvb", C::kLexicalDiversity, "Type-token ratio for verb lemmas", U::kRatio, kDiversity},
    {"LDTTRLadv", C::kLexicalDiversity, "Type-token ratio for adverb lemmas", U::kRatio, kDiversity},
    {"LDTTRLadj", C::kLexicalDiversity, "Type-token ratio for adjective lemmas", U::kRatio, kDiversity},
    {"LDTTRLpron", C::kLexicalDiversity, "Type-token ratio for pronouns", U::kRatio, kDiversity},
    {"LDTTRLrpron", C::kLexicalDiversity, "Type-token ratio for relative pronouns", U::kRatio, kDiversity},
    {"LDTTRLipron", C::kLexicalDiversity, "Type-token ratio for indefinite pronouns", U::kRatio, kDiversity},
    {"LDTTRLifn", C::kLexicalDiversity, "Type-token ratio for functional words", U::kRatio, kDiversity},
    {"LDMLTD", C::kLexicalDiversity, "Measure of Textual Lexical Diversity (MTLD)", U::kIndex, kDiversity},
    {"LDVOCd", C::kLexicalDiversity, "Vocabulary Complexity Diversity (VoCD)", U::kIndex, kDiversity},
    {"LDMaas", C::kLexicalDiversity, "Maas index", U::kIndex, kDiversity},
    {"LDDno", C::kLexicalDiversity, "Noun density", U::kRatio, kDiversity},
    {"LDDvb", C::kLexicalDiversity, "Verb density", U::kRatio, kDiversity},
    {"LDDadv", C::kLexicalDiversity, "Adverb density", U::kRatio, kDiversity},
    {"LDDadj", C::kLexicalDiversity, "Adjective density", U::kRatio, kDiversity},
    // Word frequency
    {"WFRCno", C::kWordFrequency, "Rare noun count", U::kCount, kFrequency},
    {"WFRCnoi", C::kWordFrequency, "Rare noun incidence per 1000 words", U::kIncidencePer1000, kFrequency},
    {"WFRCvb", C::kWordFrequency, "Rare verb count", U::kCount, kFrequency},
    {"WFRCvbi", C::kWordFrequency, "Rare verb incidence per 1000 words", U::kIncidencePer1000, kFrequency},
    {"WFRCadj", C::kWordFrequency, "Rare adjective count", U::kCount, kFrequency},
    {"WFRCadji", C::kWordFrequency, "Rare adjective incidence per 1000 words", U::kIncidencePer1000, kFrequency},
    {"WFRCadv", C::kWordFrequency, "Rare adverb count", U::kCount, kFrequency},
    {"WFRCadvi", C::kWordFrequency, "Rare adverb incidence per 1000 words", U::kIncidencePer1000, kFrequency},
    {"WFRCcw", C::kWordFrequency, "Rare content word count", U::kCount, kFrequency},
    {"WFRCcwi", C::kWordFrequency, "Rare content word incidence per 1000 words", U::kIncidencePer1000, kFrequency},
    {"WFRCcwd", C::kWordFrequency, "Distinct rare content word count", U::kCount, kFrequency},
    {"WFRCcwdi", C::kWordFrequency, "Distinct rare content word incidence per 1000 words", U::kIncidencePer1000, kFrequency},
    {"WFMcw", C::kWordFrequency, "Mean frequency of content words", U::kIndex, kFrequency},
    {"WFMw", C::kWordFrequency, "Mean frequency of all words", U::kIndex, kFrequency},
    {"WFMrw", C::kWordFrequency, "Mean frequency of rarest words per sentence", U::kIndex, kFrequency},
    {"WFMrcw", C::kWordFrequency, "Mean frequency of rarest content words per sentence", U::kIndex, kFrequency},
    // Semantic cohesion
    {"SECLOSadj", C::kSemanticCohesion, "LSA overlap between adjacent sentences (mean)", U::kRatio, kCohesion},
    {"SECLOSadjd", C::kSemanticCohesion, "LSA overlap between adjacent sentences (std dev)", U::kRatio, kCohesion},
    {"SECLOSall", C::kSemanticCohesion, "LSA overlap between all sentences (mean)", U::kRatio, kCohesion},
    {"SECLOSalld", C::kSemanticCohesion, "LSA overlap between all sentences (std dev)", U::kRatio, kCohesion},
    {"SECLOPadj", C::kSemanticCohesion, "LSA overlap between adjacent paragraphs (mean)", U::kRatio, kCohesion},
    {"SECLOPadjd", C::kSemanticCohesion, "LSA overlap between adjacent paragraphs (std dev)", U::kRatio, kCohesion},
    {"SECLOSgiv", C::kSemanticCohesion, "LSA overlap between given and new sentences (mean)", U::kRatio, kCohesion},
    {"SECLOSgivd", C::kSemanticCohesion, "LSA overlap between given and new sentences (std dev)", U::kRatio, kCohesion},
    // Syntactic complexity
    {"SYNNP", C::kSyntacticComplexity, "Mean number of modifiers per noun phrase", U::kIndex, kSyntax},
    {"SYNLE", C::kSyntacticComplexity, "Mean number of words before main verb", U::kIndex, kSyntax},
    {"SYNMEDwrd", C::kSyntacticComplexity, "Minimal edit distance of words between adjacent sentences", U::kDistance, kSyntax},
    {"SYNMEDlem", C::kSyntacticComplexity, "Minimal edit distance of lemmas between adjacent sentences", U::kDistance, kSyntax},
    {"SYNMEDpos", C::kSyntacticComplexity, "Minimal edit distance of POS tags between adjacent sentences", U::kDistance, kSyntax},
    {"SYNCLS1", C::kSyntacticComplexity, "Ratio of sentences with 1 clause", U::kRatio, kSyntax},
    {"SYNCLS2", C::kSyntacticComplexity, "Ratio of sentences with 2 clauses", U::kRatio, kSyntax},
    {"SYNCLS3", C::kSyntacticComplexity, "Ratio of sentences with 3 clauses", U::kRatio, kSyntax},
    {"SYNCLS4", C::kSyntacticComplexity, "Ratio of sentences with 4 clauses", U::kRatio, kSyntax},
    {"SYNCLS5", C::kSyntacticComplexity, "Ratio of sentences with 5 clauses", U::kRatio, kSyntax},
    {"SYNCLS6", C::kSyntacticComplexity, "Ratio of sentences with 6 clauses", U::kRatio, kSyntax},
    {"SYNCLS7", C::kSyntacticComplexity, "Ratio of sentences with 7 clauses", U::kRatio, kSyntax},
    // Syntactic pattern density
    {"DRNP", C::kPatternDensity, "Noun phrase density per 1000 words", U::kIncidencePer1000, kSyntax},
    {"DRNPc", C::kPatternDensity, "Noun phrase count", U::kCount, kSyntax},
    {"DRVP", C::kPatternDensity, "Verb phrase density per 1000 words", U::kIncidencePer1000, kSyntax},
    {"DRVPc", C::kPatternDensity, "Verb phrase count", U::kCount, kSyntax},
    {"DRNEG", C::kPatternDensity, "Negation expression density per 1000 words", U::kIncidencePer1000, kSyntax},
    {"DRNEGc", C::kPatternDensity, "Negation expression count", U::kCount, kSyntax},
    {"DRGER", C::kPatternDensity, "Gerund form density per 1000 words", U::kIncidencePer1000, kSyntax},
    {"DRGERc", C::kPatternDensity, "Gerund count", U::kCount, kSyntax},
    {"DRINF", C::kPatternDensity, "Infinitive form density per 1000 words", U::kIncidencePer1000, kSyntax},
    {"DRINFc", C::kPatternDensity, "Infinitive count", U::kCount, kSyntax},
    {"DRCCONJ", C::kPatternDensity, "Coordinating conjunction density per 1000 words", U::kIncidencePer1000, kSyntax},
    {"DRCCONJc", C::kPatternDensity, "Coordinating conjunction count", U::kCount, kSyntax},
    {"DRSCONJ", C::kPatternDensity, "Subordinating conjunction density per 1000 words", U::kIncidencePer1000, kSyntax},
    {"DRSCONJc", C::kPatternDensity, "Subordinating conjunction count", U::kCount, kSyntax},
    // Connectives
    {"CNCAll", C::kConnectives, "All connectives incidence per 1000 words", U::kIncidencePer1000, kConnectives},
    {"CNCCaus", C::kConnectives, "Causal connectives incidence per 1000 words", U::kIncidencePer1000, kConnectives},
    {"CNCLogic", C::kConnectives, "Logical connectives incidence per 1000 words", U::kIncidencePer1000, kConnectives},
    {"CNCADC", C::kConnectives, "Adversative connectives incidence per 1000 words", U::kIncidencePer1000, kConnectives},
    {"CNCTemp", C::kConnectives, "Temporal connectives incidence per 1000 words", U::kIncidencePer1000, kConnectives},
    {"CNCAdd", C::kConnectives, "Additive connectives incidence per 1000 words", U::kIncidencePer1000, kConnectives},
    // Word information
    {"WRDCONT", C::kWordInformation, "Content word incidence per 1000 words", U::kIncidencePer1000, kSurface},
    {"WRDCONTc", C::kWordInformation, "Content word count", U::kCount, kSurface},
    {"WRDNOUN", C::kWordInformation, "Noun incidence per 1000 words", U::kIncidencePer1000, kSurface},
    {"WRDNOUNc", C::kWordInformation, "Noun count", U::kCount, kSurface},
    {"WRDVERB", C::kWordInformation, "Verb incidence per 1000 words", U::kIncidencePer1000, kSurface},
    {"WRDVERBc", C::kWordInformation, "Verb count", U::kCount, kSurface},
    {"WRDADJ", C::kWordInformation, "Adjective incidence per 1000 words", U::kIncidencePer1000, kSurface},
    {"WRDADJc", C::kWordInformation, "Adjective count", U::kCount, kSurface},
    {"WRDADV", C::kWordInformation, "Adverb incidence per 1000 words", U::kIncidencePer1000, kSurface},
    {"WRDADVc", C::kWordInformation, "Adverb count", U::kCount, kSurface},
    {"WRDPRO", C::kWordInformation, "Personal pronoun incidence per 1000 words", U::kIncidencePer1000, kSurface},
    {"WRDPROc", C::kWordInformation, "Personal pronoun count", U::kCount, kSurface},
    {"WRDPRP1s", C::kWordInformation, "First person singular pronoun incidence per 1000 words", U::kIncidencePer1000, kSurface},
    {"WRDPRP1sc", C::kWordInformation, "First person singular pronoun count", U::kCount, kSurface},
    {"WRDPRP1p", C::kWordInformation, "First person plural pronoun incidence per 1000 words", U::kIncidencePer1000, kSurface},
    {"WRDPRP1pc", C::kWordInformation, "First person plural pronoun count", U::kCount, kSurface},
    {"WRDPRP2s", C::kWordInformation, "Second person singular pronoun incidence per 1000 words", U::kIncidencePer1000, kSurface},
    {"WRDPRP2sc", C::kWordInformation, "Second person singular pronoun count", U::kCount, kSurface},
    {"WRDPRP2p", C::kWordInformation, "Second person plural pronoun incidence per 1000 words", U::kIncidencePer1000, kSurface},
    {"WRDPRP2pc", C::kWordInformation, "Second person plural pronoun count", U::kCount, kSurface},
    {"WRDPRP3s", C::kWordInformation, "Third person singular pronoun incidence per 1000 words", U::kIncidencePer1000, kSurface},
    {"WRDPRP3sc", C::kWordInformation, "Third person singular pronoun count", U::kCount, kSurface},
    {"WRDPRP3p", C::kWordInformation, "Third person plural pronoun incidence per 1000 words", U::kIncidencePer1000, kSurface},
    {"WRDPRP3pc", C::kWordInformation, "Third person plural pronoun count", U::kCount, kSurface},
    // Psycholinguistics
    {"PSYC", C::kPsycholinguistics, "Overall concreteness ratio", U::kRatio, kPsycho},
    {"PSYC0", C::kPsycholinguistics, "Very low concreteness ratio (1-2.5)", U::kRatio, kPsycho},
    {"PSYC1", C::kPsycholinguistics, "Low concreteness ratio (2.5-4)", U::kRatio, kPsycho},
    {"PSYC2", C::kPsycholinguistics, "Medium concreteness ratio (4-5.5)", U::kRatio, kPsycho},
    {"PSYC3", C::kPsycholinguistics, "High concreteness ratio (5.5-7)", U::kRatio, kPsycho},
    {"PSYIM", C::kPsycholinguistics, "Overall imageability ratio", U::kRatio, kPsycho},
    {"PSYIM0", C::kPsycholinguistics, "Very low imageability ratio (1-2.5)", U::kRatio, kPsycho},
    {"PSYIM1", C::kPsycholinguistics, "Low imageability ratio (2.5-4)", U::kRatio, kPsycho},
    {"PSYIM2", C::kPsycholinguistics, "Medium imageability ratio (4-5.5)", U::kRatio, kPsycho},
    {"PSYIM3", C::kPsycholinguistics, "High imageability ratio (5.5-7)", U::kRatio, kPsycho},
    {"PSYFM", C::kPsycholinguistics, "Overall familiarity ratio", U::kRatio, kPsycho},
    {"PSYFM0", C::kPsycholinguistics, "Very low familiarity ratio (1-2.5)", U::kRatio, kPsycho},
    {"PSYFM1", C::kPsycholinguistics, "Low familiarity ratio (2.5-4)", U::kRatio, kPsycho},
    {"PSYFM2", C::kPsycholinguistics, "Medium familiarity ratio (4-5.5)", U::kRatio, kPsycho},
    {"PSYFM3", C::kPsycholinguistics, "High familiarity ratio (5.5-7)", U::kRatio, kPsycho},
    {"PSYAoA", C::kPsycholinguistics, "Overall age of acquisition ratio", U::kRatio, kPsycho},
    {"PSYAoA0", C::kPsycholinguistics, "Very early acquisition ratio (1-2.5)", U::kRatio, kPsycho},
    {"PSYAoA1", C::kPsycholinguistics, "Early acquisition ratio (2.5-4)", U::kRatio, kPsycho},
    {"PSYAoA2", C::kPsycholinguistics, "Medium acquisition ratio (4-5.5)", U::kRatio, kPsycho},
    {"PSYAoA3", C::kPsycholinguistics, "Late acquisition ratio (5.5-7)", U::kRatio, kPsycho},
    {"PSYARO", C::kPsycholinguistics, "Overall arousal ratio", U::kRatio, kPsycho},
    {"PSYARO0", C::kPsycholinguistics, "Very low arousal ratio (1-3)", U::kRatio, kPsycho},
    {"PSYARO1", C::kPsycholinguistics, "Low arousal ratio (3-5)", U::kRatio, kPsycho},
    {"PSYARO2", C::kPsycholinguistics, "Medium arousal ratio (5-7)", U::kRatio, kPsycho},
    {"PSYARO3", C::kPsycholinguistics, "High arousal ratio (7-9)", U::kRatio, kPsycho},
    {"PSYVAL", C::kPsycholinguistics, "Overall valence ratio", U::kRatio, kPsycho},
    {"PSYVAL0", C::kPsycholinguistics, "Very negative valence ratio (1-3)", U::kRatio, kPsycho},
    {"PSYVAL1", C::kPsycholinguistics, "Negative valence ratio (3-5)", U::kRatio, kPsycho},
    {"PSYVAL2", C::kPsycholinguistics, "Positive valence ratio (5-7)", U::kRatio, kPsycho},
    {"PSYVAL3", C::kPsycholinguistics, "Very positive valence ratio (7-9)", U::kRatio, kPsycho},
    // Textual simplicity
    {"TSSRsh", C::kTextualSimplicity, "Ratio of short sentences (< 11 words)", U::kRatio, kSurface},
    {"TSSRmd", C::kTextualSimplicity, "Ratio of medium sentences (11-12 words)", U::kRatio, kSurface},
    {"TSSRlg", C::kTextualSimplicity, "Ratio of long sentences (13-14 words)", U::kRatio, kSurface},
    {"TSSRxl", C::kTextualSimplicity, "Ratio of very long sentences (>= 15 words)", U::kRatio, kSurface},
}};

}  // namespace catalog

inline constexpr std::size_t kMetricCount = catalog::kMetrics.size();

inline const std::array<MetricDescriptor, kMetricCount>& all_metrics() {
  return catalog::kMetrics;
}

inline std::optional<std::size_t> metric_index(std::string_view code) {
  static const auto index = [] {
    std::unordered_map<std::string_view, std::size_t> m;
    for (std::size_t i = 0; i < kMetricCount; ++i) m.emplace(catalog::kMetrics[i].code, i);
    return m;
  }();
  auto it = index.find(code);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

// Catalog order, optionally restricted to one category.
inline std::vector<MetricDescriptor> list_metrics(
    std::optional<Category> category = std::nullopt) {
  std::vector<MetricDescriptor> out;
  for (const auto& d : catalog::kMetrics)
    if (!category || d.category == *category) out.push_back(d);
  return out;
}

inline std::vector<MetricDescriptor> list_metrics(std::string_view category_name) {
  return list_metrics(parse_category(category_name));
}

// Values produced by one computing module, keyed by registry code.
struct MetricSlice {
  std::vector<std::pair<std::string_view, double>> values;

  void set(std::string_view code, double value) { values.emplace_back(code, value); }
  std::optional<double> get(std::string_view code) const {
    for (const auto& [c, v] : values)
      if (c == code) return v;
    return std::nullopt;
  }
};

// One value per registered metric, in catalog order.
class MetricVector {
 public:
  double operator[](std::string_view code) const {
    auto i = metric_index(code);
    if (!i) throw UnknownMetric(std::string(code));
    return values_[*i];
  }
  double at(std::size_t i) const { return values_.at(i); }
  const std::array<double, kMetricCount>& values() const { return values_; }
  std::size_t size() const { return kMetricCount; }

  friend bool operator==(const MetricVector&, const MetricVector&) = default;

 private:
  template <typename Range>
  friend MetricVector assemble(const Range& slices);
  std::array<double, kMetricCount> values_{};
};

// Merges module slices; every registered code must appear exactly once.
template <typename Range>
MetricVector assemble(const Range& slices) {
  MetricVector out;
  std::array<bool, kMetricCount> seen{};
  for (const MetricSlice& slice : slices) {
    for (const auto& [code, value] : slice.values) {
      auto i = metric_index(code);
      if (!i) throw UnknownMetric(std::string(code));
      if (seen[*i]) throw DuplicateMetric(std::string(code));
      seen[*i] = true;
      out.values_[*i] = value;
    }
  }
  for (std::size_t i = 0; i < kMetricCount; ++i)
    if (!seen[i]) throw MissingMetric(std::string(catalog::kMetrics[i].code));
  return out;
}

struct MetricGroup {
  Category category;
  std::vector<std::pair<std::string_view, double>> values;
};

// Regroups a vector by category, categories and codes in catalog order.
inline std::vector<MetricGroup> group_by_category(const MetricVector& v) {
  std::vector<MetricGroup> groups;
  for (std::size_t c = 0; c < kCategoryCount; ++c)
    groups.push_back({static_cast<Category>(c), {}});
  for (std::size_t i = 0; i < kMetricCount; ++i) {
    const auto& d = catalog::kMetrics[i];
    groups[static_cast<std::size_t>(d.category)].values.emplace_back(d.code, v.at(i));
  }
  return groups;
}

}  // namespace metrix

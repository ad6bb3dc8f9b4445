// Computes the full metric vector for one document.
#pragma once

#include <array>
#include <memory>
#include <string>
#include <utility>

#include "metrix/cohesion.hpp"
#include "metrix/config.hpp"
#include "metrix/conllu.hpp"
#include "metrix/diversity.hpp"
#include "metrix/document.hpp"
#include "metrix/error.hpp"
#include "metrix/lexical_metrics.hpp"
#include "metrix/lexicons.hpp"
#include "metrix/readability.hpp"
#include "metrix/registry.hpp"
#include "metrix/surface.hpp"
#include "metrix/syntax.hpp"

namespace metrix {

struct Analysis {
  MetricVector metrics;
  Diagnostics diagnostics;
};

// Immutable once constructed; analyze() may be called from many threads.
class Analyzer {
 public:
  Analyzer(std::shared_ptr<const LexiconBundle> lexicons,
           std::shared_ptr<const EmbeddingProvider> embeddings = nullptr,
           MetricConfig config = {})
      : lexicons_(std::move(lexicons)),
        embeddings_(embeddings ? std::move(embeddings)
                               : std::make_shared<HashedTfProvider>()),
        config_(config) {
    if (!lexicons_) throw Error("InvalidArgument", "Analyzer needs a lexicon bundle");
  }

  const MetricConfig& config() const { return config_; }
  const LexiconBundle& lexicons() const { return *lexicons_; }
  const EmbeddingProvider& embeddings() const { return *embeddings_; }

  // Ingestion options that mark stopwords from the bundle.
  IngestOptions ingest_options() const {
    auto lex = lexicons_;
    IngestOptions o;
    o.is_stopword = [lex](std::string_view folded) { return lex->stopwords.contains(folded); };
    return o;
  }

  Document parse_conllu(std::string_view text, std::string source_id) const {
    return ingest_conllu(text, std::move(source_id), ingest_options());
  }

  Analysis analyze(const Document& doc) const {
    Analysis a;
    Diagnostics& diag = a.diagnostics;
    std::array<MetricSlice, 12> slices;
    slices[0] = descriptive(doc);
    slices[1] = word_information(doc);
    slices[2] = textual_simplicity(doc);
    slices[3] = lexical_diversity(doc, config_, &diag);
    try {
      slices[4] = readability_indices(doc);
    } catch (const DegenerateText& e) {
      diag.warnings.push_back(std::string("readability: ") + e.what());
      for (auto code : {"RDFHGL", "RDSPP", "RDMU", "RDSMOG", "RDFOG", "RDHS", "RDBR"})
        slices[4].set(code, 0.0);
    }
    slices[5] = syntactic_complexity(doc);
    slices[6] = pattern_density(doc, lexicons_->negations);
    slices[7] = referential_cohesion(doc);
    slices[8] = semantic_cohesion(doc, *embeddings_);
    slices[9] = psycholinguistic_ratios(doc, lexicons_->norms, config_, &diag);
    slices[10] = word_frequency_metrics(doc, lexicons_->frequencies, config_);
    slices[11] = connective_incidence(doc, lexicons_->connectives);
    a.metrics = assemble(slices);
    return a;
  }

 private:
  std::shared_ptr<const LexiconBundle> lexicons_;
  std::shared_ptr<const EmbeddingProvider> embeddings_;
  MetricConfig config_;
};

}  // namespace metrix

// Referential (lexical overlap) and semantic (embedding) cohesion.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "metrix/document.hpp"
#include "metrix/error.hpp"
#include "metrix/lexicons.hpp"
#include "metrix/registry.hpp"
#include "metrix/stats.hpp"
#include "metrix/stemmer.hpp"
#include "metrix/utf8.hpp"

namespace metrix {

enum class OverlapKind { kNoun, kArgument, kStem, kContentWord, kAnaphor };

namespace cohesion_detail {

// Per-sentence sets the overlap kinds are computed from.
struct SentenceProfile {
  std::set<std::string> noun_lemmas;
  std::set<std::string> pronoun_surfaces;  // personal pronouns
  std::set<std::string> noun_stems;
  std::set<std::string> content_stems;
  std::set<std::string> content_lemmas;
  bool has_anaphor = false;           // personal or demonstrative pronoun
  bool has_referent = false;          // any noun or pronoun
};

inline SentenceProfile profile(const Sentence& s) {
  SentenceProfile p;
  for (const auto& t : s.tokens) {
    if (!t.is_alphanumeric) continue;
    const bool nominal = is_nominal(t.upos);
    if (nominal) {
      p.noun_lemmas.insert(utf8::fold_case(t.lemma));
      p.noun_stems.insert(stem_spanish(utf8::fold_case(t.surface)));
    }
    if (t.is_content_word) {
      p.content_lemmas.insert(utf8::fold_case(t.lemma));
      p.content_stems.insert(stem_spanish(utf8::fold_case(t.surface)));
    }
    if (t.upos == Upos::PRON) {
      p.has_referent = true;
      if (t.morph.has("PronType", "Prs")) p.pronoun_surfaces.insert(utf8::fold_case(t.surface));
      if (t.morph.has("PronType", "Prs") || t.morph.has("PronType", "Dem"))
        p.has_anaphor = true;
    }
    if (nominal) p.has_referent = true;
  }
  return p;
}

inline bool intersects(const std::set<std::string>& a, const std::set<std::string>& b) {
  auto i = a.begin(), j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

inline std::size_t intersection_size(const std::set<std::string>& a,
                                     const std::set<std::string>& b) {
  std::size_t n = 0;
  auto i = a.begin(), j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) { ++n; ++i; ++j; }
    else if (*i < *j) ++i;
    else ++j;
  }
  return n;
}

// `a` precedes `b` in the text; stem and anaphor overlap are directional.
inline double overlap(const SentenceProfile& a, const SentenceProfile& b, OverlapKind kind) {
  switch (kind) {
    case OverlapKind::kNoun:
      return intersects(a.noun_lemmas, b.noun_lemmas) ? 1.0 : 0.0;
    case OverlapKind::kArgument:
      return intersects(a.noun_lemmas, b.noun_lemmas) ||
                     intersects(a.pronoun_surfaces, b.pronoun_surfaces)
                 ? 1.0
                 : 0.0;
    case OverlapKind::kStem:
      return intersects(b.noun_stems, a.content_stems) ? 1.0 : 0.0;
    case OverlapKind::kContentWord: {
      double shared = static_cast<double>(intersection_size(a.content_lemmas, b.content_lemmas));
      double smaller = static_cast<double>(std::min(a.content_lemmas.size(), b.content_lemmas.size()));
      return shared / std::max(1.0, smaller);
    }
    case OverlapKind::kAnaphor:
      return b.has_anaphor && a.has_referent ? 1.0 : 0.0;
  }
  return 0.0;
}

}  // namespace cohesion_detail

// Overlap of `b` with the earlier sentence `a`.
inline double pair_overlap(const Sentence& a, const Sentence& b, OverlapKind kind) {
  return cohesion_detail::overlap(cohesion_detail::profile(a), cohesion_detail::profile(b), kind);
}

inline MetricSlice referential_cohesion(const Document& doc) {
  using cohesion_detail::overlap;
  std::vector<cohesion_detail::SentenceProfile> profiles;
  profiles.reserve(doc.sentences.size());
  for (const auto& s : doc.sentences) profiles.push_back(cohesion_detail::profile(s));

  constexpr OverlapKind kKinds[] = {OverlapKind::kNoun, OverlapKind::kArgument,
                                    OverlapKind::kStem, OverlapKind::kContentWord,
                                    OverlapKind::kAnaphor};
  std::vector<double> adj[5], all[5];
  const std::size_t n = profiles.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 0; k < 5; ++k) {
        double v = overlap(profiles[i], profiles[j], kKinds[k]);
        all[k].push_back(v);
        if (j == i + 1) adj[k].push_back(v);
      }
    }
  }
  MetricSlice out;
  out.set("CRFNO1", stats::mean(adj[0]));
  out.set("CRFAO1", stats::mean(adj[1]));
  out.set("CRFSO1", stats::mean(adj[2]));
  out.set("CRFCWO1", stats::mean(adj[3]));
  out.set("CRFCWO1d", stats::stdev(adj[3]));
  out.set("CRFANP1", stats::mean(adj[4]));
  out.set("CRFNOa", stats::mean(all[0]));
  out.set("CRFAOa", stats::mean(all[1]));
  out.set("CRFSOa", stats::mean(all[2]));
  out.set("CRFCWOa", stats::mean(all[3]));
  out.set("CRFCWOad", stats::stdev(all[3]));
  out.set("CRFANPa", stats::mean(all[4]));
  return out;
}

// Maps a token sequence to a fixed-dimension vector. Implementations must be
// deterministic and safe to call concurrently.
class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;
  virtual std::vector<double> embed(std::span<const std::string> tokens) const = 0;
  virtual std::size_t dimension() const = 0;
  virtual std::string name() const = 0;
};

// Term-frequency vector over FNV-1a hashed buckets of case-folded tokens.
class HashedTfProvider : public EmbeddingProvider {
 public:
  explicit HashedTfProvider(std::size_t dimension = 256) : dim_(dimension) {
    if (dim_ < 2) throw ProviderFailure("embedding dimension must be >= 2");
  }

  static std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ull;
    }
    return h;
  }

  std::vector<double> embed(std::span<const std::string> tokens) const override {
    std::vector<double> v(dim_, 0.0);
    for (const auto& t : tokens) v[fnv1a(utf8::fold_case(t)) % dim_] += 1.0;
    return v;
  }
  std::size_t dimension() const override { return dim_; }
  std::string name() const override { return "hashed-tf-" + std::to_string(dim_); }

 private:
  std::size_t dim_;
};

// Dense word vectors: a float32 little-endian row-major matrix with one row
// of `d` values per vocabulary entry, plus a vocab.tsv of word<TAB>row.
// A text vector is the sum of its known words' rows.
class MatrixEmbeddingProvider : public EmbeddingProvider {
 public:
  static std::shared_ptr<MatrixEmbeddingProvider> load(const std::filesystem::path& matrix,
                                                       const std::filesystem::path& vocab) {
    auto p = std::shared_ptr<MatrixEmbeddingProvider>(new MatrixEmbeddingProvider());
    p->name_ = "matrix:" + matrix.filename().string();
    std::string text;
    try {
      text = detail::read_file(vocab);
    } catch (const Error& e) {
      throw ProviderFailure(e.what());
    }
    std::size_t max_row = 0;
    bool any = false;
    detail::for_each_line(text, [&](std::string_view line, std::size_t line_no) {
      if (detail::strip(line).empty()) return;
      auto tab = line.find('\t');
      if (tab == std::string_view::npos)
        throw ProviderFailure("vocab line " + std::to_string(line_no) + ": expected word<TAB>row");
      auto row = detail::parse_double(detail::strip(line.substr(tab + 1)));
      if (!row || *row < 0 || *row != std::floor(*row))
        throw ProviderFailure("vocab line " + std::to_string(line_no) + ": bad row index");
      auto r = static_cast<std::size_t>(*row);
      p->rows_[utf8::fold_case(detail::strip(line.substr(0, tab)))] = r;
      max_row = std::max(max_row, r);
      any = true;
    });
    if (!any) throw ProviderFailure("empty vocabulary: " + vocab.string());

    std::ifstream in(matrix, std::ios::binary);
    if (!in) throw ProviderFailure("cannot open " + matrix.string());
    std::vector<char> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::size_t rows = max_row + 1;
    if (bytes.size() % (4 * rows) != 0)
      throw ProviderFailure("matrix size is not a multiple of the vocabulary rows");
    p->dim_ = bytes.size() / (4 * rows);
    if (p->dim_ < 2) throw ProviderFailure("embedding dimension must be >= 2");
    p->data_.resize(bytes.size() / 4);
    for (std::size_t i = 0; i < p->data_.size(); ++i) {
      const auto* b = reinterpret_cast<const unsigned char*>(&bytes[4 * i]);
      std::uint32_t u = std::uint32_t(b[0]) | std::uint32_t(b[1]) << 8 |
                        std::uint32_t(b[2]) << 16 | std::uint32_t(b[3]) << 24;
      float f;
      std::memcpy(&f, &u, 4);
      p->data_[i] = f;
    }
    return p;
  }

  std::vector<double> embed(std::span<const std::string> tokens) const override {
    std::vector<double> v(dim_, 0.0);
    for (const auto& t : tokens) {
      auto it = rows_.find(utf8::fold_case(t));
      if (it == rows_.end()) continue;
      const float* row = &data_[it->second * dim_];
      for (std::size_t k = 0; k < dim_; ++k) v[k] += row[k];
    }
    return v;
  }
  std::size_t dimension() const override { return dim_; }
  std::string name() const override { return name_; }

 private:
  MatrixEmbeddingProvider() = default;
  std::unordered_map<std::string, std::size_t> rows_;
  std::vector<float> data_;
  std::size_t dim_ = 0;
  std::string name_;
};

// Cosine similarity; 0 when either vector is all zeros.
inline double cosine(std::span<const double> a, std::span<const double> b) {
  double dot = 0, na = 0, nb = 0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), -1.0, 1.0);
}

inline std::vector<std::string> content_lemmas(const Sentence& s) {
  std::vector<std::string> out;
  for (const auto& t : s.tokens)
    if (t.is_content_word) out.push_back(utf8::fold_case(t.lemma));
  return out;
}

namespace cohesion_detail {

inline std::vector<double> mean_of(const std::vector<std::vector<double>>& vs,
                                   std::size_t first, std::size_t last, std::size_t dim) {
  std::vector<double> m(dim, 0.0);
  if (last <= first) return m;
  for (std::size_t i = first; i < last; ++i)
    for (std::size_t k = 0; k < dim; ++k) m[k] += vs[i][k];
  for (auto& x : m) x /= static_cast<double>(last - first);
  return m;
}

}  // namespace cohesion_detail

inline MetricSlice semantic_cohesion(const Document& doc, const EmbeddingProvider& provider) {
  const std::size_t dim = provider.dimension();
  std::vector<std::vector<double>> sv;
  sv.reserve(doc.sentences.size());
  for (const auto& s : doc.sentences) {
    auto lemmas = content_lemmas(s);
    auto v = provider.embed(lemmas);
    if (v.size() != dim) throw ProviderFailure(provider.name() + " returned a wrong-sized vector");
    sv.push_back(std::move(v));
  }

  std::vector<double> adj, all, giv, par;
  for (std::size_t i = 0; i < sv.size(); ++i) {
    for (std::size_t j = i + 1; j < sv.size(); ++j) {
      double c = cosine(sv[i], sv[j]);
      all.push_back(c);
      if (j == i + 1) adj.push_back(c);
    }
    if (i >= 1) giv.push_back(cosine(sv[i], cohesion_detail::mean_of(sv, 0, i, dim)));
  }
  std::vector<std::vector<double>> pv;
  for (const auto& p : doc.paragraphs) pv.push_back(cohesion_detail::mean_of(sv, p.first, p.last, dim));
  for (std::size_t i = 0; i + 1 < pv.size(); ++i) par.push_back(cosine(pv[i], pv[i + 1]));

  MetricSlice out;
  out.set("SECLOSadj", stats::mean(adj));
  out.set("SECLOSadjd", stats::stdev(adj));
  out.set("SECLOSall", stats::mean(all));
  out.set("SECLOSalld", stats::stdev(all));
  out.set("SECLOPadj", stats::mean(par));
  out.set("SECLOPadjd", stats::stdev(par));
  out.set("SECLOSgiv", stats::mean(giv));
  out.set("SECLOSgivd", stats::stdev(giv));
  return out;
}

}  // namespace metrix

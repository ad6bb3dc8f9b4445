// CoNLL-U ingestion and serialization.
//
// Sentences end at blank lines. A paragraph starts at a `# newpar` (or
// `# newdoc`) comment, or after two or more consecutive blank lines.
// Multiword-token range lines ("3-4") and empty nodes ("5.1") are skipped;
// their component word lines carry the annotation.
#pragma once

#include <charconv>
#include <functional>
#include <istream>
#include <iterator>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "metrix/document.hpp"
#include "metrix/error.hpp"
#include "metrix/syllables.hpp"
#include "metrix/utf8.hpp"

namespace metrix {

struct IngestOptions {
  // Receives the case-folded surface; unset means nothing is a stopword.
  std::function<bool(std::string_view)> is_stopword;
};

namespace detail {

inline std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto tab = line.find('\t', start);
    out.push_back(line.substr(start, tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return out;
}

inline bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

inline bool is_paragraph_comment(std::string_view line) {
  std::string_view body = trim(line.substr(1));
  for (std::string_view key : {"newpar", "newdoc"}) {
    if (body.substr(0, key.size()) == key &&
        (body.size() == key.size() || body[key.size()] == ' ' ||
         body[key.size()] == '\t'))
      return true;
  }
  return false;
}

inline void finish_token(Token& t, const IngestOptions& options) {
  t.syllables = syllabify(t.surface);
  t.is_alphanumeric = utf8::has_alnum(t.surface);
  t.is_content_word = is_content_upos(t.upos);
  t.is_stopword = options.is_stopword &&
                  options.is_stopword(utf8::fold_case(t.surface));
}

// Exactly one ROOT per sentence: the first VERB (else the first token)
// becomes ROOT and any other ROOT-headed token attaches to it.
inline void repair_root(Sentence& s) {
  std::size_t roots = 0;
  for (const auto& t : s.tokens) roots += t.is_root() ? 1 : 0;
  if (roots == 1) return;
  std::size_t chosen = 0;
  for (std::size_t i = 0; i < s.tokens.size(); ++i) {
    if (s.tokens[i].upos == Upos::VERB) {
      chosen = i;
      break;
    }
  }
  for (std::size_t i = 0; i < s.tokens.size(); ++i) {
    if (i == chosen) continue;
    if (s.tokens[i].is_root()) s.tokens[i].head = static_cast<int>(chosen);
  }
  s.tokens[chosen].head = Token::kRoot;
  if (s.tokens[chosen].deprel.empty() || roots == 0)
    s.tokens[chosen].deprel = "root";
}

struct ParsedSentences {
  std::vector<Sentence> sentences;
  std::vector<bool> starts_paragraph;
};

inline Features parse_features(std::string_view field, std::size_t line_no) {
  Features f;
  if (field == "_" || field.empty()) return f;
  std::size_t start = 0;
  while (start <= field.size()) {
    auto bar = field.find('|', start);
    std::string_view item = field.substr(start, bar - start);
    auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0)
      throw MalformedConllu(line_no, "bad feature '" + std::string(item) + "'");
    f.set(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1)));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return f;
}

inline ParsedSentences parse_sentences(std::string_view text,
                                       const IngestOptions& options) {
  ParsedSentences out;
  Sentence current;
  std::vector<std::size_t> head_lines;
  bool pending_paragraph = true;
  int blank_run = 0;
  std::size_t line_no = 0;

  auto flush = [&]() {
    if (current.tokens.empty()) return;
    for (std::size_t i = 0; i < current.tokens.size(); ++i) {
      int h = current.tokens[i].head;
      if (h != Token::kRoot &&
          (h < 0 || h >= static_cast<int>(current.tokens.size())))
        throw MalformedConllu(head_lines[i], "head out of range");
    }
    repair_root(current);
    current.index = out.sentences.size();
    out.starts_paragraph.push_back(pending_paragraph || out.sentences.empty());
    out.sentences.push_back(std::move(current));
    current = Sentence{};
    head_lines.clear();
    pending_paragraph = false;
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : nl - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (trim(line).empty()) {
      if (!current.tokens.empty()) {
        flush();
        blank_run = 1;
      } else if (++blank_run >= 2 && !out.sentences.empty()) {
        pending_paragraph = true;
      }
      continue;
    }
    blank_run = 0;
    if (line.front() == '#') {
      if (is_paragraph_comment(line)) {
        flush();
        pending_paragraph = true;
      }
      continue;
    }

    auto cols = split_tabs(line);
    if (cols.size() != 10)
      throw MalformedConllu(line_no, "expected 10 columns, found " +
                                         std::to_string(cols.size()));
    std::string_view id = cols[0];
    if (id.find('-') != std::string_view::npos ||
        id.find('.') != std::string_view::npos)
      continue;
    int id_value = 0;
    if (!parse_int(id, id_value) ||
        id_value != static_cast<int>(current.tokens.size()) + 1)
      throw MalformedConllu(line_no, "unexpected token id '" + std::string(id) + "'");

    Token t;
    t.surface = std::string(cols[1]);
    t.lemma = (cols[2] == "_" && cols[1] != "_") ? t.surface : std::string(cols[2]);
    t.upos = parse_upos(cols[3]);
    t.morph = parse_features(cols[5], line_no);
    int head = 0;
    if (cols[6] == "_") {
      head = 0;
    } else if (!parse_int(cols[6], head) || head < 0) {
      throw MalformedConllu(line_no, "bad head '" + std::string(cols[6]) + "'");
    }
    t.head = head == 0 ? Token::kRoot : head - 1;
    t.deprel = cols[7] == "_" ? std::string() : std::string(cols[7]);
    finish_token(t, options);
    current.tokens.push_back(std::move(t));
    head_lines.push_back(line_no);
  }
  flush();
  return out;
}

inline Document build_document(ParsedSentences parsed, std::string source_id) {
  Document doc;
  doc.source_id = std::move(source_id);
  doc.sentences = std::move(parsed.sentences);
  for (std::size_t i = 0; i < doc.sentences.size(); ++i) {
    if (parsed.starts_paragraph[i] || doc.paragraphs.empty())
      doc.paragraphs.push_back({i, i + 1});
    else
      doc.paragraphs.back().last = i + 1;
  }
  bool has_word = false;
  for (const auto& s : doc.sentences)
    if (s.word_count() > 0) has_word = true;
  if (!has_word) throw EmptyDocument();
  return doc;
}

}  // namespace detail

inline Document ingest_conllu(std::string_view text, std::string source_id,
                              const IngestOptions& options = {}) {
  return detail::build_document(detail::parse_sentences(text, options),
                                std::move(source_id));
}

inline Document ingest_conllu(std::istream& in, std::string source_id,
                              const IngestOptions& options = {}) {
  std::string text{std::istreambuf_iterator<char>(in),
                   std::istreambuf_iterator<char>()};
  return ingest_conllu(std::string_view(text), std::move(source_id), options);
}

// Inverse of ingest_conllu: every paragraph is introduced by `# newpar`.
inline std::string to_conllu(const Document& doc) {
  std::string out;
  for (const auto& para : doc.paragraphs) {
    out += "# newpar\n";
    for (std::size_t si = para.first; si < para.last; ++si) {
      const auto& s = doc.sentences[si];
      for (std::size_t i = 0; i < s.tokens.size(); ++i) {
        const auto& t = s.tokens[i];
        out += std::to_string(i + 1);
        out += '\t';
        out += t.surface;
        out += '\t';
        out += t.lemma;
        out += '\t';
        out += to_string(t.upos);
        out += "\t_\t";
        if (t.morph.empty()) {
          out += '_';
        } else {
          bool first = true;
          for (const auto& [k, v] : t.morph.entries()) {
            if (!first) out += '|';
            first = false;
            out += k;
            out += '=';
            out += v;
          }
        }
        out += '\t';
        out += std::to_string(t.is_root() ? 0 : t.head + 1);
        out += '\t';
        out += t.deprel.empty() ? std::string("_") : t.deprel;
        out += "\t_\t_\n";
      }
      out += '\n';
    }
  }
  return out;
}

}  // namespace metrix

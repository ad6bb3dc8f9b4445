// Raw-text annotation. An annotator turns UTF-8 text into CoNLL-U; the
// engine never depends on a particular tagger.
#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "metrix/conllu.hpp"
#include "metrix/document.hpp"
#include "metrix/error.hpp"
#include "metrix/utf8.hpp"

namespace metrix {

class Annotator {
 public:
  virtual ~Annotator() = default;
  // Returns CoNLL-U for `raw`. Implementations report failures by throwing
  // AnnotatorFailure.
  virtual std::string annotate(std::string_view raw) = 0;
};

// Runs an external command with the raw text on stdin and reads CoNLL-U
// from its stdout, e.g. a UDPipe or spaCy wrapper script.
class CommandAnnotator : public Annotator {
 public:
  explicit CommandAnnotator(std::string command) : command_(std::move(command)) {}

  std::string annotate(std::string_view raw) override {
    char path[] = "/tmp/metrix-annotate-XXXXXX";
    int fd = ::mkstemp(path);
    if (fd < 0) throw AnnotatorFailure("cannot create temporary file");
    std::size_t written = 0;
    while (written < raw.size()) {
      auto n = ::write(fd, raw.data() + written, raw.size() - written);
      if (n <= 0) {
        ::close(fd);
        ::unlink(path);
        throw AnnotatorFailure("cannot write temporary file");
      }
      written += static_cast<std::size_t>(n);
    }
    ::close(fd);

    std::string cmd = command_ + " < '" + path + "'";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
      ::unlink(path);
      throw AnnotatorFailure("cannot start '" + command_ + "'");
    }
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = ::pclose(pipe);
    ::unlink(path);
    if (status == -1 || !WIFEXITED(status) || WEXITSTATUS(status) != 0)
      throw AnnotatorFailure("'" + command_ + "' exited with status " +
                             std::to_string(WIFEXITED(status) ? WEXITSTATUS(status)
                                                              : status));
    return out;
  }

 private:
  std::string command_;
};

// Rule-based baseline: punctuation splitting, sentence splitting on
// terminal punctuation, a closed-class lookup and suffix heuristics for
// open classes. Dependencies are flat (everything attaches to the first
// verb, else the first word). Good enough for smoke tests and
// surface-level metrics; use a real tagger for anything syntactic.
class RuleBasedAnnotator : public Annotator {
 public:
  std::string annotate(std::string_view raw) override {
    std::string out;
    std::vector<std::string> sentence;
    for (auto& tok : tokenize(raw)) {
      sentence.push_back(tok);
      if (tok == "." || tok == "!" || tok == "?" || tok == "…") {
        emit(sentence, out);
        sentence.clear();
      }
    }
    emit(sentence, out);
    return out;
  }

 private:
  struct Tag {
    Upos upos;
    const char* feats;
  };

  static bool is_punct_cp(char32_t c) {
    switch (c) {
      case U'.': case U',': case U';': case U':': case U'!': case U'?':
      case U'¡': case U'¿': case U'"': case U'\'': case U'(': case U')':
      case U'[': case U']': case U'«': case U'»': case U'…': case U'“':
      case U'”': case U'‘': case U'’': case U'—': case U'–':
        return true;
      default:
        return false;
    }
  }

  static std::vector<std::string> tokenize(std::string_view raw) {
    std::vector<std::string> out;
    std::u32string word;
    auto flush_word = [&]() {
      if (!word.empty()) out.push_back(utf8::encode(word));
      word.clear();
    };
    for (char32_t c : utf8::decode(raw)) {
      if (c == U' ' || c == U'\t' || c == U'\n' || c == U'\r') {
        flush_word();
      } else if (is_punct_cp(c) && !(c == U'.' && !word.empty() &&
                                     utf8::is_digit(word.back()))) {
        flush_word();
        std::u32string p(1, c);
        out.push_back(utf8::encode(p));
      } else {
        word.push_back(c);
      }
    }
    flush_word();
    return out;
  }

  static const std::unordered_map<std::string, Tag>& closed_class() {
    static const std::unordered_map<std::string, Tag> table = [] {
      std::unordered_map<std::string, Tag> t;
      for (const char* w : {"el", "la", "los", "las", "un", "una", "unos",
                            "unas", "este", "esta", "estos", "estas", "ese",
                            "esa", "esos", "esas", "mi", "mis", "tu", "tus",
                            "su", "sus", "nuestro", "nuestra", "cada", "todo",
                            "toda", "todos", "todas", "otro", "otra"})
        t[w] = {Upos::DET, "_"};
      t["yo"] = {Upos::PRON, "Number=Sing|Person=1|PronType=Prs"};
      t["tú"] = {Upos::PRON, "Number=Sing|Person=2|PronType=Prs"};
      t["él"] = {Upos::PRON, "Number=Sing|Person=3|PronType=Prs"};
      t["ella"] = {Upos::PRON, "Number=Sing|Person=3|PronType=Prs"};
      t["usted"] = {Upos::PRON, "Number=Sing|Person=3|PronType=Prs"};
      t["nosotros"] = {Upos::PRON, "Number=Plur|Person=1|PronType=Prs"};
      t["nosotras"] = {Upos::PRON, "Number=Plur|Person=1|PronType=Prs"};
      t["vosotros"] = {Upos::PRON, "Number=Plur|Person=2|PronType=Prs"};
      t["ellos"] = {Upos::PRON, "Number=Plur|Person=3|PronType=Prs"};
      t["ellas"] = {Upos::PRON, "Number=Plur|Person=3|PronType=Prs"};
      t["ustedes"] = {Upos::PRON, "Number=Plur|Person=3|PronType=Prs"};
      t["me"] = {Upos::PRON, "Number=Sing|Person=1|PronType=Prs"};
      t["te"] = {Upos::PRON, "Number=Sing|Person=2|PronType=Prs"};
      t["se"] = {Upos::PRON, "Person=3|PronType=Prs"};
      t["nos"] = {Upos::PRON, "Number=Plur|Person=1|PronType=Prs"};
      t["le"] = {Upos::PRON, "Number=Sing|Person=3|PronType=Prs"};
      t["les"] = {Upos::PRON, "Number=Plur|Person=3|PronType=Prs"};
      t["lo"] = {Upos::PRON, "Number=Sing|Person=3|PronType=Prs"};
      t["esto"] = {Upos::PRON, "PronType=Dem"};
      t["eso"] = {Upos::PRON, "PronType=Dem"};
      t["quien"] = {Upos::PRON, "PronType=Rel"};
      t["algo"] = {Upos::PRON, "PronType=Ind"};
      t["alguien"] = {Upos::PRON, "PronType=Ind"};
      t["nada"] = {Upos::PRON, "PronType=Neg"};
      t["nadie"] = {Upos::PRON, "PronType=Neg"};
      for (const char* w : {"a", "ante", "bajo", "con", "contra", "de", "desde",
                            "en", "entre", "hacia", "hasta", "para", "por",
                            "según", "sin", "sobre", "tras", "del", "al"})
        t[w] = {Upos::ADP, "_"};
      for (const char* w : {"y", "e", "o", "u", "ni", "pero", "sino", "mas"})
        t[w] = {Upos::CCONJ, "_"};
      for (const char* w : {"que", "porque", "si", "aunque", "como", "cuando",
                            "mientras", "pues"})
        t[w] = {Upos::SCONJ, "_"};
      for (const char* w : {"es", "son", "era", "eran", "fue", "fueron", "está",
                            "están", "estaba", "ha", "han", "he", "has",
                            "hemos", "había", "habían", "soy", "somos",
                            "estoy", "estamos", "sea", "será"})
        t[w] = {Upos::AUX, "Mood=Ind|VerbForm=Fin"};
      for (const char* w : {"no", "sí", "muy", "más", "menos", "también",
                            "tampoco", "ya", "nunca", "siempre", "bien", "mal",
                            "aquí", "allí", "hoy", "ayer", "mañana", "ahora",
                            "luego", "después", "antes", "jamás", "casi"})
        t[w] = {Upos::ADV, "_"};
      return t;
    }();
    return table;
  }

  static bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() > suffix.size() + 1 &&
           s.substr(s.size() - suffix.size()) == suffix;
  }

  static Tag guess(const std::string& surface, bool sentence_initial) {
    if (!utf8::has_alnum(surface)) return {Upos::PUNCT, "_"};
    bool digits = true;
    for (char32_t c : utf8::decode(surface))
      if (!utf8::is_digit(c) && c != U'.' && c != U',') digits = false;
    if (digits) return {Upos::NUM, "NumType=Card"};
    std::string lower = utf8::fold_case(surface);
    auto it = closed_class().find(lower);
    if (it != closed_class().end()) return it->second;
    if (!sentence_initial && lower != surface) return {Upos::PROPN, "_"};
    if (ends_with(lower, "mente")) return {Upos::ADV, "_"};
    if (ends_with(lower, "ando") || ends_with(lower, "iendo"))
      return {Upos::VERB, "VerbForm=Ger"};
    if (ends_with(lower, "ar") || ends_with(lower, "er") || ends_with(lower, "ir"))
      return {Upos::VERB, "VerbForm=Inf"};
    if (ends_with(lower, "oso") || ends_with(lower, "osa") ||
        ends_with(lower, "ble") || ends_with(lower, "ivo") ||
        ends_with(lower, "iva"))
      return {Upos::ADJ, "_"};
    return {Upos::NOUN, "_"};
  }

  static void emit(const std::vector<std::string>& tokens, std::string& out) {
    if (tokens.empty()) return;
    std::vector<Tag> tags;
    bool initial = true;
    for (const auto& t : tokens) {
      tags.push_back(guess(t, initial));
      if (tags.back().upos != Upos::PUNCT) initial = false;
    }
    std::size_t root = tokens.size();
    for (std::size_t i = 0; i < tokens.size() && root == tokens.size(); ++i)
      if (tags[i].upos == Upos::VERB || tags[i].upos == Upos::AUX) root = i;
    for (std::size_t i = 0; i < tokens.size() && root == tokens.size(); ++i)
      if (tags[i].upos != Upos::PUNCT) root = i;
    if (root == tokens.size()) root = 0;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      out += std::to_string(i + 1) + '\t' + tokens[i] + '\t' +
             utf8::fold_case(tokens[i]) + '\t' +
             std::string(to_string(tags[i].upos)) + "\t_\t" + tags[i].feats +
             '\t';
      if (i == root) {
        out += "0\troot";
      } else {
        out += std::to_string(root + 1) + '\t' +
               (tags[i].upos == Upos::PUNCT ? "punct" : "dep");
      }
      out += "\t_\t_\n";
    }
    out += '\n';
  }
};

// Annotates each blank-line-separated paragraph of `raw` separately, so
// paragraph structure always comes from the raw text.
inline Document annotate(std::string_view raw, Annotator& annotator,
                         std::string source_id = "raw",
                         const IngestOptions& options = {}) {
  std::vector<std::string> paragraphs;
  std::string current;
  std::size_t pos = 0;
  while (pos <= raw.size()) {
    auto nl = raw.find('\n', pos);
    std::string_view line = raw.substr(
        pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? raw.size() + 1 : nl + 1;
    if (detail::trim(line).empty()) {
      if (!current.empty()) paragraphs.push_back(std::move(current));
      current.clear();
    } else {
      if (!current.empty()) current += '\n';
      current += line;
    }
  }
  if (!current.empty()) paragraphs.push_back(std::move(current));

  detail::ParsedSentences merged;
  for (const auto& p : paragraphs) {
    std::string conllu;
    try {
      conllu = annotator.annotate(p);
    } catch (const AnnotatorFailure&) {
      throw;
    } catch (const std::exception& e) {
      throw AnnotatorFailure(e.what());
    }
    detail::ParsedSentences part;
    try {
      part = detail::parse_sentences(conllu, options);
    } catch (const MalformedConllu& e) {
      throw AnnotatorFailure(std::string("unparseable output: ") + e.what());
    }
    for (std::size_t i = 0; i < part.sentences.size(); ++i) {
      part.sentences[i].index = merged.sentences.size();
      merged.starts_paragraph.push_back(i == 0);
      merged.sentences.push_back(std::move(part.sentences[i]));
    }
  }
  return detail::build_document(std::move(merged), std::move(source_id));
}

}  // namespace metrix

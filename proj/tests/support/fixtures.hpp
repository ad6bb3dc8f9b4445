// Test fixtures: a small CoNLL-U builder and seeded random document generators.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "metrix/metrix.hpp"

namespace fixtures {

// One CoNLL-U token line, with 1-based head (0 = root) as in the format.
struct Row {
  std::string form, lemma, upos, feats;
  int head = 0;
  std::string deprel;
};

// Builds CoNLL-U text sentence by sentence.
class ConlluBuilder {
 public:
  ConlluBuilder& paragraph() {
    pending_par_ = true;
    return *this;
  }
  ConlluBuilder& sentence(const std::vector<Row>& rows) {
    if (pending_par_) out_ << "# newpar\n";
    pending_par_ = false;
    int id = 1;
    for (const auto& r : rows) {
      out_ << id++ << '\t' << r.form << '\t' << (r.lemma.empty() ? r.form : r.lemma) << '\t'
           << r.upos << "\t_\t" << (r.feats.empty() ? "_" : r.feats) << '\t' << r.head << '\t'
           << (r.deprel.empty() ? "dep" : r.deprel) << "\t_\t_\n";
    }
    out_ << '\n';
    return *this;
  }
  std::string str() const { return out_.str(); }
  metrix::Document doc(const std::string& id = "doc") const {
    return metrix::ingest_conllu(str(), id);
  }

 private:
  std::ostringstream out_;
  bool pending_par_ = false;
};

// A sentence of (form, upos) pairs; the first token is ROOT and the rest
// attach to it. Lemmas equal the lowercase form.
inline std::vector<Row> flat(std::initializer_list<std::pair<const char*, const char*>> words) {
  std::vector<Row> rows;
  for (const auto& [form, upos] : words) {
    rows.push_back({form, metrix::utf8::fold_case(form), upos, "", rows.empty() ? 0 : 1,
                    rows.empty() ? "root" : "dep"});
  }
  return rows;
}

// `n` distinct nouns followed by a period.
inline std::vector<Row> nouns(int n, const std::string& prefix = "w") {
  std::vector<Row> rows;
  for (int i = 0; i < n; ++i)
    rows.push_back({prefix + std::to_string(i), prefix + std::to_string(i), "NOUN", "",
                    i == 0 ? 0 : 1, i == 0 ? "root" : "dep"});
  rows.push_back({".", ".", "PUNCT", "", 1, "punct"});
  return rows;
}

// Word list for the random generators.
struct Entry {
  const char* form;
  const char* lemma;
  const char* upos;
  const char* feats;
};

inline const std::vector<Entry>& vocabulary() {
  static const std::vector<Entry> v = {
      {"perro", "perro", "NOUN", "Gender=Masc|Number=Sing"},
      {"perros", "perro", "NOUN", "Gender=Masc|Number=Plur"},
      {"gato", "gato", "NOUN", "Gender=Masc|Number=Sing"},
      {"casa", "casa", "NOUN", "Gender=Fem|Number=Sing"},
      {"casas", "casa", "NOUN", "Gender=Fem|Number=Plur"},
      {"libro", "libro", "NOUN", "Gender=Masc|Number=Sing"},
      {"niño", "niño", "NOUN", "Gender=Masc|Number=Sing"},
      {"niños", "niño", "NOUN", "Gender=Masc|Number=Plur"},
      {"mesa", "mesa", "NOUN", "Gender=Fem|Number=Sing"},
      {"ciudad", "ciudad", "NOUN", "Gender=Fem|Number=Sing"},
      {"agua", "agua", "NOUN", "Gender=Fem|Number=Sing"},
      {"tiempo", "tiempo", "NOUN", "Gender=Masc|Number=Sing"},
      {"idea", "idea", "NOUN", "Gender=Fem|Number=Sing"},
      {"problema", "problema", "NOUN", "Gender=Masc|Number=Sing"},
      {"historia", "historia", "NOUN", "Gender=Fem|Number=Sing"},
      {"árbol", "árbol", "NOUN", "Gender=Masc|Number=Sing"},
      {"camino", "camino", "NOUN", "Gender=Masc|Number=Sing"},
      {"organización", "organización", "NOUN", "Gender=Fem|Number=Sing"},
      {"felicidad", "felicidad", "NOUN", "Gender=Fem|Number=Sing"},
      {"conocimiento", "conocimiento", "NOUN", "Gender=Masc|Number=Sing"},
      {"María", "María", "PROPN", ""},
      {"Lima", "Lima", "PROPN", ""},
      {"Juan", "Juan", "PROPN", ""},
      {"corre", "correr", "VERB", "Mood=Ind|Number=Sing|Person=3|Tense=Pres|VerbForm=Fin"},
      {"corren", "correr", "VERB", "Mood=Ind|Number=Plur|Person=3|Tense=Pres|VerbForm=Fin"},
      {"correr", "correr", "VERB", "VerbForm=Inf"},
      {"corriendo", "correr", "VERB", "VerbForm=Ger"},
      {"salta", "saltar", "VERB", "Mood=Ind|Number=Sing|Person=3|Tense=Pres|VerbForm=Fin"},
      {"come", "comer", "VERB", "Mood=Ind|Number=Sing|Person=3|Tense=Pres|VerbForm=Fin"},
      {"comer", "comer", "VERB", "VerbForm=Inf"},
      {"habla", "hablar", "VERB", "Mood=Ind|Number=Sing|Person=3|Tense=Pres|VerbForm=Fin"},
      {"hablando", "hablar", "VERB", "VerbForm=Ger"},
      {"pienso", "pensar", "VERB", "Mood=Ind|Number=Sing|Person=1|Tense=Pres|VerbForm=Fin"},
      {"vivimos", "vivir", "VERB", "Mood=Ind|Number=Plur|Person=1|Tense=Pres|VerbForm=Fin"},
      {"escribió", "escribir", "VERB", "Mood=Ind|Number=Sing|Person=3|Tense=Past|VerbForm=Fin"},
      {"leer", "leer", "VERB", "VerbForm=Inf"},
      {"comido", "comer", "VERB", "Gender=Masc|Number=Sing|Tense=Past|VerbForm=Part"},
      {"es", "ser", "AUX", "Mood=Ind|Number=Sing|Person=3|Tense=Pres|VerbForm=Fin"},
      {"ha", "haber", "AUX", "Mood=Ind|Number=Sing|Person=3|Tense=Pres|VerbForm=Fin"},
      {"está", "estar", "AUX", "Mood=Ind|Number=Sing|Person=3|Tense=Pres|VerbForm=Fin"},
      {"grande", "grande", "ADJ", "Number=Sing"},
      {"pequeño", "pequeño", "ADJ", "Gender=Masc|Number=Sing"},
      {"rojo", "rojo", "ADJ", "Gender=Masc|Number=Sing"},
      {"bonita", "bonito", "ADJ", "Gender=Fem|Number=Sing"},
      {"nuevo", "nuevo", "ADJ", "Gender=Masc|Number=Sing"},
      {"difícil", "difícil", "ADJ", "Number=Sing"},
      {"rápidamente", "rápidamente", "ADV", ""},
      {"siempre", "siempre", "ADV", ""},
      {"nunca", "nunca", "ADV", "Polarity=Neg"},
      {"muy", "muy", "ADV", ""},
      {"no", "no", "ADV", "Polarity=Neg"},
      {"yo", "yo", "PRON", "Case=Nom|Number=Sing|Person=1|PronType=Prs"},
      {"tú", "tú", "PRON", "Case=Nom|Number=Sing|Person=2|PronType=Prs"},
      {"él", "él", "PRON", "Case=Nom|Gender=Masc|Number=Sing|Person=3|PronType=Prs"},
      {"ella", "ella", "PRON", "Case=Nom|Gender=Fem|Number=Sing|Person=3|PronType=Prs"},
      {"nosotros", "nosotros", "PRON", "Case=Nom|Number=Plur|Person=1|PronType=Prs"},
      {"ellos", "él", "PRON", "Case=Nom|Number=Plur|Person=3|PronType=Prs"},
      {"esto", "este", "PRON", "Number=Sing|PronType=Dem"},
      {"que", "que", "PRON", "PronType=Rel"},
      {"alguien", "alguien", "PRON", "PronType=Ind"},
      {"nadie", "nadie", "PRON", "PronType=Neg"},
      {"el", "el", "DET", "Definite=Def|Gender=Masc|Number=Sing|PronType=Art"},
      {"la", "el", "DET", "Definite=Def|Gender=Fem|Number=Sing|PronType=Art"},
      {"los", "el", "DET", "Definite=Def|Gender=Masc|Number=Plur|PronType=Art"},
      {"un", "uno", "DET", "Definite=Ind|Gender=Masc|Number=Sing|PronType=Art"},
      {"mi", "mi", "DET", "Number=Sing|Person=1|Poss=Yes|PronType=Prs"},
      {"de", "de", "ADP", ""},
      {"en", "en", "ADP", ""},
      {"con", "con", "ADP", ""},
      {"sin", "sin", "ADP", ""},
      {"y", "y", "CCONJ", ""},
      {"pero", "pero", "CCONJ", ""},
      {"o", "o", "CCONJ", ""},
      {"porque", "porque", "SCONJ", ""},
      {"aunque", "aunque", "SCONJ", ""},
      {"cuando", "cuando", "SCONJ", ""},
      {"dos", "dos", "NUM", "NumType=Card"},
      {"3", "3", "NUM", "NumType=Card"},
  };
  return v;
}

inline std::string deprel_for(const std::string& upos, std::mt19937_64& rng) {
  auto pick = [&](std::initializer_list<const char*> xs) {
    std::vector<const char*> v(xs);
    return std::string(v[rng() % v.size()]);
  };
  if (upos == "NOUN" || upos == "PROPN") return pick({"nsubj", "obj", "obl", "nmod"});
  if (upos == "ADJ") return "amod";
  if (upos == "DET") return "det";
  if (upos == "NUM") return "nummod";
  if (upos == "VERB")
    return pick({"ccomp", "xcomp", "advcl", "acl:relcl", "conj", "csubj", "parataxis", "obj"});
  if (upos == "AUX") return pick({"aux", "cop"});
  if (upos == "ADP") return "case";
  if (upos == "CCONJ") return "cc";
  if (upos == "SCONJ") return "mark";
  if (upos == "PRON") return pick({"nsubj", "obj"});
  if (upos == "ADV") return "advmod";
  if (upos == "PUNCT") return "punct";
  return "dep";
}

struct RandomDocOptions {
  int min_sentences = 1;
  int max_sentences = 8;
  int min_words = 1;
  int max_words = 14;
  double paragraph_prob = 0.25;
  // Restrict the vocabulary to its first `vocab_limit` entries (0 = all).
  std::size_t vocab_limit = 0;
};

// A random sentence whose dependency tree is built by attaching each token
// (in a random order) to an already placed one.
inline std::vector<Row> random_sentence(std::mt19937_64& rng, const RandomDocOptions& o) {
  const auto& vocab = vocabulary();
  std::size_t limit = o.vocab_limit ? std::min(o.vocab_limit, vocab.size()) : vocab.size();
  int n = o.min_words + static_cast<int>(rng() % static_cast<std::uint64_t>(o.max_words - o.min_words + 1));
  std::vector<Row> rows;
  for (int i = 0; i < n; ++i) {
    const Entry& e = vocab[rng() % limit];
    std::string form = e.form;
    if (i == 0 && rng() % 2 == 0 && form[0] >= 'a' && form[0] <= 'z') form[0] = static_cast<char>(form[0] - 32);
    rows.push_back({form, e.lemma, e.upos, e.feats, 0, ""});
    if (i + 1 < n && rng() % 10 == 0) rows.push_back({",", ",", "PUNCT", "", 0, ""});
  }
  rows.push_back({".", ".", "PUNCT", "", 0, "punct"});

  std::vector<std::size_t> order(rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  rows[order[0]].head = 0;
  rows[order[0]].deprel = "root";
  for (std::size_t k = 1; k < order.size(); ++k) {
    std::size_t parent = order[rng() % k];
    rows[order[k]].head = static_cast<int>(parent) + 1;
    rows[order[k]].deprel = deprel_for(rows[order[k]].upos, rng);
  }
  return rows;
}

inline std::string random_conllu(std::mt19937_64& rng, const RandomDocOptions& o = {}) {
  ConlluBuilder b;
  int sentences = o.min_sentences +
                  static_cast<int>(rng() % static_cast<std::uint64_t>(o.max_sentences - o.min_sentences + 1));
  for (int s = 0; s < sentences; ++s) {
    if (s > 0 && std::uniform_real_distribution<double>(0, 1)(rng) < o.paragraph_prob) b.paragraph();
    b.sentence(random_sentence(rng, o));
  }
  return b.str();
}

inline metrix::Document random_document(std::mt19937_64& rng, const RandomDocOptions& o = {}) {
  return metrix::ingest_conllu(random_conllu(rng, o), "random");
}

// Natural-ish token stream: Zipf-distributed draws from a synthetic
// vocabulary of `types` words.
inline std::vector<std::string> zipf_tokens(std::mt19937_64& rng, std::size_t n,
                                            std::size_t types = 400, double s = 1.0) {
  std::vector<double> w(types);
  for (std::size_t i = 0; i < types; ++i) w[i] = 1.0 / std::pow(static_cast<double>(i + 1), s);
  std::discrete_distribution<std::size_t> dist(w.begin(), w.end());
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("w" + std::to_string(dist(rng)));
  return out;
}

// Path of the shipped lexicon directory.
inline std::string data_dir() { return METRIX_DEFAULT_DATA_DIR; }

inline std::shared_ptr<const metrix::LexiconBundle> shipped_lexicons() {
  static auto bundle =
      std::make_shared<const metrix::LexiconBundle>(metrix::LexiconBundle::load(data_dir()));
  return bundle;
}

}  // namespace fixtures

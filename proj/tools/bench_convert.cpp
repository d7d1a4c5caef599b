// Benchmark: serial reference vs OpenMP kernels for document conversion and
// recall evaluation, on a synthetic corpus cycled from realistic sentences.

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "umconv/conllu.hpp"
#include "umconv/mapping.hpp"
#include "umconv/pipeline.hpp"
#include "umconv/recall.hpp"
#include "umconv/schema.hpp"
#include "umconv/unimorph.hpp"
#include "umconv/util.hpp"

using namespace umconv;
using Clock = std::chrono::steady_clock;

namespace {

const char* kRegistryText = R"(POS	N
POS	V
POS	V.PTCP
POS	V.CVB
POS	ADJ
POS	DET
POS	ADP
POS	PRO
POS	CONJ
POS	ADV
POS	AUX
POS	PROPN
POS	NUM
POS	PART
POS	INTJ
Mood	IND
Mood	SBJV
Tense	PST
Tense	PRS
Tense	FUT
Person	1
Person	2
Person	3
Number	SG
Number	PL
Aspect	IPFV
Aspect	PFV
Case	NOM
Case	ACC
Definiteness	DEF
Definiteness	INDF
Finiteness	FIN
Finiteness	NFIN
Gender	MASC
Gender	FEM
Possession	PSS*
ArgumentMarking	ARG*
LanguageSpecific	LGSPEC*
)";

const char* kMappingText =
    "UPOS:VERB\tV\nUPOS:NOUN\tN\nUPOS:ADJ\tADJ\nUPOS:DET\tDET\nUPOS:ADP\tADP\n"
    "UPOS:PUNCT\tEXCLUDE\nUPOS:PRON\tPRO\nUPOS:AUX\tAUX\nUPOS:ADV\tADV\n"
    "Mood=Ind\tIND\nMood=Sub\tSBJV\nNumber=Sing\tSG\nNumber=Plur\tPL\n"
    "Person=1\t1\nPerson=2\t2\nPerson=3\t3\nTense=Past\tPST\nTense=Pres\tPRS\n"
    "Tense=Fut\tFUT\nVerbForm=Fin\tFIN\nVerbForm=Inf\tNFIN\nGender=Masc\tMASC\n"
    "Gender=Fem\tFEM\nDefinite=Def\tDEF\nDefinite=Ind\tINDF\n";

const char* kRulesText =
    "es DELETE IF pos=V,has=FIN THEN del=FIN\n"
    "es DELETE IF pos=N THEN deldim=Gender\n"
    "es ADD IF pos=V,has=IND,ud=Tense=Imp THEN add=IPFV\n"
    "es ADD IF has=IPFV THEN add=PST\n"
    "es ADD IF pos=V,has=IND,ud=Tense=Past,lacksdim=Aspect THEN add=PFV\n"
    "es FIX IF pos=V,has=SBJV,has=PST,regex=ra(s|mos|is|n)?$ THEN add=LGSPEC1\n";

Document make_corpus(std::size_t sentences) {
  std::string unit =
      "1\tEl\tel\tDET\t_\tDefinite=Def|Gender=Masc|Number=Sing\t2\tdet\t_\t_\n"
      "2\tgeneral\tgeneral\tNOUN\t_\tGender=Masc|Number=Sing\t3\tnsubj\t_\t_\n"
      "3\tmandaba\tmandar\tVERB\t_\tMood=Ind|Number=Sing|Person=3|Tense=Imp|VerbForm=Fin\t0\troot\t_\t_\n"
      "4\tlas\tel\tDET\t_\tDefinite=Def|Gender=Fem|Number=Plur\t5\tdet\t_\t_\n"
      "5\ttropas\ttropa\tNOUN\t_\tGender=Fem|Number=Plur\t3\tobj\t_\t_\n"
      "6\tmandara\tmandar\tVERB\t_\tMood=Sub|Number=Sing|Person=3|Tense=Imp|VerbForm=Fin\t3\tccomp\t_\t_\n"
      "7\t.\t.\tPUNCT\t_\t_\t3\tpunct\t_\t_\n\n";
  std::string text;
  text.reserve(unit.size() * sentences);
  for (std::size_t i = 0; i < sentences; ++i) text += unit;
  return parse_document(text);
}

std::string make_table_text() {
  return "mandar\tmandaba\tV;IND;PST;3;SG;IPFV\n"
         "mandar\tmandaba\tV;IND;PST;1;SG;IPFV\n"
         "mandar\tmandara\tV;SBJV;PST;3;SG;LGSPEC1\n"
         "general\tgeneral\tN;SG\n"
         "tropa\ttropas\tN;PL\n";
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t sentences = 20000;
  int repeats = 3;
  int jobs = 0;  // 0 = all hardware threads
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    auto next = [&]() { return (i + 1 < argc) ? std::stoul(argv[++i]) : 0ul; };
    if (arg == "--sentences") sentences = next();
    else if (arg == "--repeats") repeats = static_cast<int>(next());
    else if (arg == "--jobs") jobs = static_cast<int>(next());
  }
#ifdef _OPENMP
  int threads = jobs > 0 ? jobs : omp_get_max_threads();
#else
  int threads = 1;
#endif

  DimensionRegistry registry = DimensionRegistry::from_text(kRegistryText);
  MappingTable mapping = MappingTable::from_text(kMappingText, registry);
  RuleSet rules = RuleSet::parse(kRulesText, registry);
  ParadigmTable table = ParadigmTable::from_text(make_table_text(), "es", registry);
  Document corpus = make_corpus(sentences);

  std::cout << "sentences=" << sentences << " tokens=" << corpus.token_count()
            << " threads=" << threads << " repeats=" << repeats << "\n";
  std::cout << "kernel                3    best-serial[s]  best-parallel[s]  speedup\n";

  auto bench = [&](const std::string& name, auto serial_fn, auto parallel_fn) {
    double best_serial = 1e30, best_parallel = 1e30;
    for (int r = 0; r < repeats; ++r) {
      auto t0 = Clock::now();
      serial_fn();
      best_serial = std::min(best_serial, seconds_since(t0));
      auto t1 = Clock::now();
      parallel_fn();
      best_parallel = std::min(best_parallel, seconds_since(t1));
    }
    std::printf("%-20s  %16.4f  %16.4f  %7.2fx\n", name.c_str(), best_serial, best_parallel,
                best_serial / best_parallel);
  };

  ConvertOptions serial_opt{"es", false, 1};
  ConvertOptions parallel_opt{"es", false, jobs > 0 ? jobs : threads};

  bench(
      "convert_document",
      [&]() {
        Document doc = corpus;
        convert_document_serial(doc, serial_opt, mapping, rules, registry);
      },
      [&]() {
        Document doc = corpus;
        convert_document_parallel(doc, parallel_opt, mapping, rules, registry);
      });

  Document converted = corpus;
  convert_document_serial(converted, serial_opt, mapping, rules, registry);

  bench(
      "evaluate_recall",
      [&]() { evaluate_recall(converted, table, registry); },
      [&]() { evaluate_recall_parallel(converted, table, registry, parallel_opt.jobs); });

  // sanity: both paths agree
  Document a = corpus, b = corpus;
  convert_document_serial(a, serial_opt, mapping, rules, registry);
  convert_document_parallel(b, parallel_opt, mapping, rules, registry);
  if (serialize_document(a) != serialize_document(b)) {
    std::cerr << "mismatch between serial and parallel conversion\n";
    return 1;
  }
  RecallReport ra = evaluate_recall(a, table, registry);
  RecallReport rb = evaluate_recall_parallel(b, table, registry, parallel_opt.jobs);
  if (ra.matches != rb.matches || ra.overlapping_tokens != rb.overlapping_tokens) {
    std::cerr << "mismatch between serial and parallel recall\n";
    return 1;
  }
  std::cout << "parallel kernels agree with the serial reference\n";
  return 0;
}

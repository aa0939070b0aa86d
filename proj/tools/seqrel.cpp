// Command-line front end: guess, bench, gen-table.
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <mutex>
#include <sstream>

#include <CLI11.hpp>

#include "seqrel/seqrel.hpp"

using namespace seqrel;

namespace {

constexpr int kGuardExit = 2;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SEQREL_SEED")) return std::stoull(env);
  return 42;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string part; std::getline(ss, part, sep);)
    if (!part.empty()) out.push_back(part);
  return out;
}

/// Field a table specifier uses when --field is not given.
FieldSpec natural_field(const std::string& spec) {
  if (spec.rfind("file:", 0) == 0) return read_table_file(spec.substr(5)).field;
  if (spec.rfind("family:", 0) == 0) return FieldSpec::parse("fp:65521");
  return FieldSpec::parse("rational");
}

template <class F>
Table<F> open_table(const std::string& spec, const F& field) {
  if (spec.rfind("builtin:", 0) == 0) return builtin_table(spec.substr(8), field);
  if (spec.rfind("file:", 0) == 0) return file_table(read_table_file(spec.substr(5)), field, spec);
  if (spec.rfind("family:", 0) == 0) {
    auto parts = split(spec.substr(7), ':');
    if (parts.size() < 3 || parts.size() > 4) throw TableError("family spec is family:<kind>:<n>:<d>[:seed]");
    if constexpr (std::is_same_v<F, PrimeField>) {
      std::uint64_t seed = parts.size() == 4 ? std::stoull(parts[3]) : default_seed();
      std::size_t n = std::stoul(parts[1]);
      return family_table(parse_family(parts[0]), n, static_cast<unsigned>(std::stoul(parts[2])), seed, field,
                          MonomialOrder::drl(n))
          .table;
    } else {
      throw FieldError("family tables are defined over prime fields only");
    }
  }
  throw TableError("unknown table specifier '" + spec + "' (expected builtin:, file: or family:)");
}

struct GuessArgs {
  std::string table;
  std::string order;
  std::string a, b = "1";
  std::string algorithm = "div";
  std::string field;
  bool trace = false;
  bool raw = false;
  std::size_t max_staircase = 4096;
};

template <class F>
void print_trace(const Ring<F>& ring, const std::vector<TraceEntry<F>>& trace) {
  for (const auto& e : trace) {
    std::cerr << "trace " << e.step << ' ' << to_string(e.tag) << ": [" << ring.to_string(e.pair.f) << ", "
              << ring.to_string(e.pair.c) << "]";
    if (e.valid) std::cerr << " lm(F~)=" << to_string(e.lm_ftilde) << (*e.valid ? " valid" : " fails");
    if (e.shift) std::cerr << " shift=" << to_string(*e.shift);
    if (!e.note.empty()) std::cerr << " (" << e.note << ")";
    std::cerr << "\n";
  }
}

template <class F>
int run_guess(const GuessArgs& args, const F& field) {
  Table<F> table = open_table(args.table, field);
  const std::size_t n = table.nvars();
  MonomialOrder ord = args.order.empty() ? MonomialOrder::drl(n) : MonomialOrder::parse(args.order, n);
  Ring<F> ring(field, ord);
  GuessOptions opt;
  opt.trace = args.trace;
  opt.interreduce = !args.raw;
  opt.max_staircase = args.max_staircase;

  GroebnerBasis<F> gb;
  std::uint64_t muls = 0, queries = 0;
  auto need_a = [&] {
    if (args.a.empty()) throw std::invalid_argument("--a is required for --algorithm " + args.algorithm);
    return parse_monomial(args.a, n);
  };
  if (args.algorithm == "div" || args.algorithm == "bm" || args.algorithm == "adaptive") {
    GuessResult<F> r;
    if (args.algorithm == "div") {
      r = guess_div(table, field, ord, need_a(), parse_monomial(args.b, n), opt);
    } else if (args.algorithm == "bm") {
      if (n != 1) throw std::invalid_argument("--algorithm bm needs a one-dimensional table");
      r = berlekamp_massey(table, field, need_a()[0]);
    } else {
      r = guess_adaptive(table, field, ord, opt);
    }
    if (args.trace) print_trace(ring, r.trace);
    for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
    gb = r.gb;
    muls = r.muls;
    queries = r.queries;
  } else if (args.algorithm == "oracle") {
    OpCounter c;
    Table<F> fresh = table.fresh();
    gb = scalar_fglm(fresh, field, ord, need_a(), &c);
    if (!args.raw) gb = interreduce(ring, gb.relations);
    muls = c.mul_count;
    queries = fresh.query_count();
  } else if (args.algorithm == "adaptive-oracle") {
    auto r = adaptive_sfglm(table, field, ord, args.max_staircase);
    gb = args.raw ? r.gb : interreduce(ring, r.gb.relations);
    muls = r.muls;
    queries = r.queries;
  } else {
    throw std::invalid_argument("unknown algorithm '" + args.algorithm + "'");
  }
  if (!gb.finite_staircase) std::cerr << "warning: the relations do not define a finite staircase\n";
  for (const auto& g : gb.relations) std::cout << ring.to_string(g) << "\n";
  std::cout << "staircase=" << gb.staircase.size() << " gb=" << gb.relations.size() << " muls=" << muls
            << " queries=" << queries << "\n";
  return 0;
}

int cmd_guess(const GuessArgs& args) {
  FieldSpec fs = args.field.empty() ? natural_field(args.table) : FieldSpec::parse(args.field);
  if (fs.rational) return run_guess(args, RationalField{});
  return run_guess(args, PrimeField(fs.prime));
}

struct BenchArgs {
  std::string families = "rectangle,lshape,simplex";
  std::size_t n = 2;
  unsigned dmin = 5, dmax = 10;
  std::string algorithms = "div";
  std::string seeds;
  std::string out;
  bool verbose = false;
  unsigned jobs = 1;
};

int cmd_bench(const BenchArgs& args) {
  std::vector<std::uint64_t> seeds;
  for (const auto& s : split(args.seeds, ',')) seeds.push_back(std::stoull(s));
  if (seeds.empty()) seeds.push_back(default_seed());
  struct Cell {
    Family family;
    unsigned d;
    std::string algorithm;
    std::uint64_t seed;
  };
  std::vector<Cell> cells;
  for (const auto& f : split(args.families, ','))
    for (unsigned d = args.dmin; d <= args.dmax; ++d)
      for (const auto& alg : split(args.algorithms, ','))
        for (auto seed : seeds) cells.push_back({parse_family(f), d, alg, seed});
  for (const auto& c : cells)
    if (std::find(bench_algorithms().begin(), bench_algorithms().end(), c.algorithm) == bench_algorithms().end())
      throw std::invalid_argument("unknown bench algorithm '" + c.algorithm + "'");

  std::ofstream file;
  if (!args.out.empty()) {
    file.open(args.out);
    if (!file) throw std::runtime_error("cannot write " + args.out);
  }
  std::ostream& out = args.out.empty() ? std::cout : file;
  out << csv_header(args.verbose) << "\n";

  std::vector<BenchRecord> records(cells.size());
  std::mutex io;
  std::size_t next = 0;
  auto worker = [&] {
    while (true) {
      std::size_t i;
      {
        std::lock_guard<std::mutex> lock(io);
        if (next == cells.size()) return;
        i = next++;
      }
      records[i] = run_bench_cell(cells[i].family, args.n, cells[i].d, cells[i].algorithm, cells[i].seed);
      std::lock_guard<std::mutex> lock(io);
      if (!records[i].matches)
        std::cerr << "warning: " << records[i].family << " d=" << records[i].d << " " << records[i].algorithm
                  << " did not recover the generating basis\n";
    }
  };
  std::vector<std::future<void>> pool;
  for (unsigned j = 0; j < std::max(1u, args.jobs); ++j) pool.push_back(std::async(std::launch::async, worker));
  for (auto& f : pool) f.get();
  for (const auto& r : records) out << to_csv(r, args.verbose) << "\n";
  return 0;
}

struct GenArgs {
  std::string table;
  std::string rows = "8x8";
  std::string out;
  std::string field;
};

template <class F>
int run_gen(const GenArgs& args, const F& field) {
  Table<F> table = open_table(args.table, field);
  std::vector<unsigned> dims;
  for (const auto& s : split(args.rows, 'x')) dims.push_back(static_cast<unsigned>(std::stoul(s)));
  if (args.out.empty()) {
    write_table_window(std::cout, table, dims);
  } else {
    std::ofstream f(args.out);
    if (!f) throw std::runtime_error("cannot write " + args.out);
    write_table_window(f, table, dims);
  }
  return 0;
}

int cmd_gen(const GenArgs& args) {
  FieldSpec fs = args.field.empty() ? natural_field(args.table) : FieldSpec::parse(args.field);
  if (fs.rational) return run_gen(args, RationalField{});
  return run_gen(args, PrimeField(fs.prime));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Guess linear recurrence relations of multidimensional sequences"};
  app.require_subcommand(1);

  GuessArgs g;
  auto* guess = app.add_subcommand("guess", "Guess a Groebner basis of the relations of a table");
  guess->add_option("table", g.table, "builtin:<name>[:args], file:<path> or family:<kind>:<n>:<d>[:seed]")->required();
  guess->add_option("--order", g.order, "Monomial ordering, e.g. drl(y<x), lex(y<x), wdeg(1,2;y<x)");
  guess->add_option("--a", g.a, "Column bound monomial a");
  guess->add_option("--b", g.b, "Row bound monomial b")->capture_default_str();
  guess->add_option("--algorithm", g.algorithm, "div | adaptive | bm | oracle | adaptive-oracle")
      ->check(CLI::IsMember({"div", "adaptive", "bm", "oracle", "adaptive-oracle"}))
      ->capture_default_str();
  guess->add_option("--field", g.field, "fp:<prime> or rational");
  guess->add_flag("--trace", g.trace, "Print intermediate pairs on stderr");
  guess->add_flag("--raw", g.raw, "Skip interreduction of the output");
  guess->add_option("--max-staircase", g.max_staircase, "Abort past this staircase size")->capture_default_str();

  BenchArgs b;
  auto* bench = app.add_subcommand("bench", "Count operations on the benchmark families");
  bench->add_option("--families", b.families, "Comma separated: rectangle,lshape,simplex")->capture_default_str();
  bench->add_option("--n", b.n, "Dimension (2 or 3)")->capture_default_str();
  bench->add_option("--dmin", b.dmin)->capture_default_str();
  bench->add_option("--dmax", b.dmax)->capture_default_str();
  bench->add_option("--algorithms", b.algorithms, "Comma separated: div,adaptive,oracle,adaptive-oracle")
      ->capture_default_str();
  bench->add_option("--seeds", b.seeds, "Comma separated seeds (default SEQREL_SEED or 42)");
  bench->add_option("--out", b.out, "CSV output path (default stdout)");
  bench->add_flag("--verbose", b.verbose, "Add a detail column with both divalgo runs");
  bench->add_option("--jobs", b.jobs, "Parallel cells")->capture_default_str();

  GenArgs t;
  auto* gen = app.add_subcommand("gen-table", "Write a window of a table to a file");
  gen->add_option("table", t.table, "Table specifier")->required();
  gen->add_option("--rows", t.rows, "Window, e.g. 4x4")->capture_default_str();
  gen->add_option("--out", t.out, "Output path (default stdout)");
  gen->add_option("--field", t.field, "fp:<prime> or rational");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*guess) return cmd_guess(g);
    if (*bench) return cmd_bench(b);
    if (*gen) return cmd_gen(t);
  } catch (const StaircaseLimit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kGuardExit;
  } catch (const UnavailableTerm& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kGuardExit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

#include "tanglecolor/cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "tanglecolor/braid.hpp"
#include "tanglecolor/error.hpp"
#include "tanglecolor/finite_group.hpp"
#include "tanglecolor/galex.hpp"
#include "tanglecolor/io.hpp"
#include "tanglecolor/psi.hpp"
#include "tanglecolor/quandle.hpp"

namespace tc {
namespace {

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::string cleaned = text;
  for (char& c : cleaned)
    if (c == ',') c = ' ';
  std::istringstream in(cleaned);
  std::vector<int> out;
  int v = 0;
  while (in >> v) out.push_back(v);
  std::string leftover;
  if (in.clear(), in >> leftover)
    throw Error("Parse", "expected integers for " + what + ", got '" + leftover + "'");
  if (out.empty()) throw Error("Parse", "empty " + what);
  return out;
}

// "<strands> <letters> <w1> ... <wk>", same fields as a knot record
BraidWord parse_inline_braid(const std::string& spec) {
  std::vector<int> t = parse_int_list(spec, "braid word");
  if (t.size() < 2) throw Error("Parse", "inline braid needs '<strands> <letters> <word...>'");
  int strands = t[0];
  int count = t[1];
  if (count < 0 || static_cast<std::size_t>(count) != t.size() - 2)
    throw Error("Parse", "inline braid declares " + std::to_string(count) + " letters but has " +
                             std::to_string(t.size() - 2));
  return make_braid("inline", strands, std::vector<int>(t.begin() + 2, t.end()));
}

// Returns by value: the record must outlive the (often temporary) vector
// it was read from.
template <class T>
T pick_record(std::vector<T> records, const std::string& name, const std::string& what,
              const std::string& path) {
  if (name.empty()) {
    if (records.size() == 1) return std::move(records.front());
    throw Error("Parse", "'" + path + "' holds " + std::to_string(records.size()) + " " + what +
                             " records; choose one by name");
  }
  for (T& r : records)
    if (r.name == name) return std::move(r);
  throw Error("RecordNotFound", "no " + what + " record named '" + name + "' in '" + path + "'");
}

// routes subcommand output to --out when given, else to the session stream
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error("FileWrite", "cannot open '" + path + "' for writing");
      os_ = &file_;
    }
  }
  std::ostream& stream() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

std::vector<std::string> parse_symmetries(const std::string& csv) {
  std::vector<std::string> out;
  std::istringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    if (item != "m" && item != "r" && item != "rm")
      throw Error("BadSymmetry", "unknown symmetry '" + item + "', expected m, r or rm");
    if (std::find(out.begin(), out.end(), item) == out.end()) out.push_back(item);
  }
  if (out.empty()) throw Error("BadSymmetry", "empty symmetry list");
  return out;
}

// a path is either a quandle file or a directory of *.qnd files
std::vector<Quandle> collect_quandles(const std::vector<std::string>& paths) {
  namespace fs = std::filesystem;
  std::vector<Quandle> out;
  for (const std::string& raw : paths) {
    std::string path = resolve_input_path(raw);
    std::error_code ec;
    if (fs::is_directory(path, ec)) {
      std::vector<std::string> files;
      for (const auto& entry : fs::directory_iterator(path)) {
        if (entry.is_regular_file() && entry.path().extension() == ".qnd")
          files.push_back(entry.path().string());
      }
      std::sort(files.begin(), files.end());
      if (files.empty()) throw Error("FileNotFound", "no .qnd files in '" + raw + "'");
      for (const std::string& f : files)
        for (Quandle& q : read_quandles_file(f)) out.push_back(std::move(q));
    } else {
      for (Quandle& q : read_quandles_file(path)) out.push_back(std::move(q));
    }
  }
  return out;
}

int base_index(int base_label, const Quandle& q) {
  if (base_label < 1 || base_label > q.order)
    throw Error("BadBase", "base label " + std::to_string(base_label) +
                               " out of range 1.." + std::to_string(q.order) + " for quandle '" +
                               q.name + "'");
  return base_label - 1;
}

Subgroup parse_subgroup(const FiniteGroup& g, const GroupAutomorphism& f,
                        const std::string& spec) {
  if (spec == "fix") return fixed_subgroup(g, f);
  std::vector<int> labels = parse_int_list(spec, "subgroup element list");
  std::vector<int> elements;
  for (int v : labels) {
    if (v < 1 || v > g.order)
      throw Error("Parse", "subgroup element " + std::to_string(v) + " out of range 1.." +
                               std::to_string(g.order));
    elements.push_back(v - 1);
  }
  return make_subgroup(g, elements);
}

void quandle_check_lines(const std::vector<std::string>& files, std::ostream& out) {
  for (const std::string& file : files) {
    for (const Quandle& q : read_quandles_file(file)) {
      InnerGroup inn = inner_group(q);
      out << "OK " << q.name << (is_connected(q) ? " connected" : " not-connected")
          << (is_faithful(q) ? " faithful" : " not-faithful") << " |Inn|=" << inn.group.order()
          << "\n";
    }
  }
}

void quandle_info_lines(const std::vector<std::string>& files, std::ostream& out) {
  for (const std::string& file : files) {
    for (const Quandle& q : read_quandles_file(file)) {
      InnerGroup inn = inner_group(q);
      bool connected = is_connected(q);
      out << "quandle " << q.name << " order=" << q.order << "\n";
      out << "  connected: " << (connected ? "yes" : "no") << "\n";
      out << "  faithful: " << (is_faithful(q) ? "yes" : "no") << "\n";
      out << "  |Inn|: " << inn.group.order() << "\n";
      out << "  |Inn'|: " << derived_subgroup(inn.group).order() << "\n";
      std::vector<int> sizes(inn.distinct_columns.size(), 0);
      for (int cls : inn.column_class) ++sizes[cls];
      out << "  fiber sizes: ";
      for (std::size_t i = 0; i < sizes.size(); ++i) out << (i ? "," : "") << sizes[i];
      out << "\n";
      if (connected) {
        std::vector<int> p = end_permutation(q, 0);
        out << "  p: ";
        for (std::size_t i = 0; i < p.size(); ++i) out << (i ? "," : "") << p[i] + 1;
        out << "\n";
        GalexReconstruction rec = galex_criterion(q);
        if (rec.is_galex) {
          ExtensionClass cls = classify_extension(*rec.group, *rec.f);
          const char* kind = cls.kind == ExtensionClass::Faithful        ? "faithful"
                             : cls.kind == ExtensionClass::AbelianExtension ? "abelian"
                                                                            : "nonabelian";
          out << "  galex: yes kind=" << kind << " |Fix|=" << cls.fix.order() << "\n";
        } else {
          out << "  galex: no\n";
        }
      }
    }
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"tangle-coloring invariants of knots over finite quandles"};
  app.name("tanglecolor");
  app.require_subcommand(1);

  struct {
    std::vector<std::string> files;
    std::vector<std::string> quandle_paths;
    std::string quandle_file, group_file, auto_file, cocycle_file, knots_file;
    std::string record, group_record, auto_record, cocycle_record;
    std::string braid_spec, subgroup_spec, element_spec;
    std::string name, ext_name, out_path, ext_out, base_out;
    std::string symmetries = "m,r,rm";
    int base = 1;
    int workers = 1;
    long long max_inn = 0;
  } o;

  CLI::App* quandle = app.add_subcommand("quandle", "operate on quandle tables");
  quandle->require_subcommand(1);

  CLI::App* check = quandle->add_subcommand("check", "validate quandle files");
  check->add_option("files", o.files, "quandle files")->required();

  CLI::App* info = quandle->add_subcommand("info", "report structure of quandle records");
  info->add_option("files", o.files, "quandle files")->required();

  CLI::App* build_galex =
      quandle->add_subcommand("galex", "build a generalized Alexander quandle x*y = f(xy^-1)y");
  build_galex->add_option("--group", o.group_file, "group table file")->required();
  build_galex->add_option("--auto", o.auto_file, "automorphism file")->required();
  build_galex->add_option("--group-record", o.group_record, "group record name");
  build_galex->add_option("--auto-record", o.auto_record, "automorphism record name");
  build_galex->add_option("--name", o.name, "name for the new quandle");
  build_galex->add_option("--out", o.out_path, "write the quandle here");

  CLI::App* conj = quandle->add_subcommand("conj", "conjugation quandle on a conjugacy class");
  conj->add_option("--permgroup", o.group_file, "permutation group file")->required();
  conj->add_option("--record", o.record, "permgroup record name");
  conj->add_option("--element", o.element_spec, "1-based image list of the class seed")
      ->required();
  conj->add_option("--name", o.name, "name for the new quandle");
  conj->add_option("--out", o.out_path, "write the quandle here");

  CLI::App* homog = quandle->add_subcommand(
      "homog", "coset quandle Ha*Hb = Hf(ab^-1)b on H\\G for H inside Fix(G,f)");
  homog->add_option("--group", o.group_file, "group table file")->required();
  homog->add_option("--auto", o.auto_file, "automorphism file")->required();
  homog->add_option("--subgroup", o.subgroup_spec, "1-based element list, or 'fix'")->required();
  homog->add_option("--group-record", o.group_record, "group record name");
  homog->add_option("--auto-record", o.auto_record, "automorphism record name");
  homog->add_option("--name", o.name, "name for the new quandle");
  homog->add_option("--out", o.out_path, "write the quandle here");

  CLI::App* cocycle = app.add_subcommand("cocycle", "2-cocycles of coset coverings");
  cocycle->require_subcommand(1);

  CLI::App* extract = cocycle->add_subcommand(
      "extract", "read the cocycle off the covering GAlex(G,f) -> coset quandle");
  extract->add_option("--group", o.group_file, "group table file")->required();
  extract->add_option("--auto", o.auto_file, "automorphism file")->required();
  extract->add_option("--subgroup", o.subgroup_spec, "1-based element list, or 'fix'")
      ->required();
  extract->add_option("--group-record", o.group_record, "group record name");
  extract->add_option("--auto-record", o.auto_record, "automorphism record name");
  extract->add_option("--name", o.name, "name for the cocycle");
  extract->add_option("--out", o.out_path, "write the cocycle here");
  extract->add_option("--ext-out", o.ext_out, "also write the extension quandle here");
  extract->add_option("--ext-name", o.ext_name, "name for the extension quandle");
  extract->add_option("--base-out", o.base_out, "also write the base coset quandle here");

  CLI::App* ccheck = cocycle->add_subcommand("check", "validate cocycle records against a base");
  ccheck->add_option("--cocycle", o.cocycle_file, "cocycle file")->required();
  ccheck->add_option("--quandle,-q", o.quandle_file, "base quandle file")->required();
  ccheck->add_option("--group", o.group_file, "coefficient group file")->required();
  ccheck->add_option("--cocycle-record", o.cocycle_record, "cocycle record name");
  ccheck->add_option("--record", o.record, "quandle record name");
  ccheck->add_option("--group-record", o.group_record, "group record name");

  CLI::App* psi_cmd = app.add_subcommand("psi", "tangle-coloring vector of a knot");
  psi_cmd->add_option("--quandle,-q", o.quandle_file, "quandle file")->required();
  psi_cmd->add_option("--record", o.record, "quandle record name");
  psi_cmd->add_option("--braid", o.braid_spec, "inline braid '<strands> <letters> <word...>'");
  psi_cmd->add_option("--knots", o.knots_file, "knot file");
  psi_cmd->add_option("--base", o.base, "1-based base element (default 1)");

  CLI::App* symmetry =
      app.add_subcommand("symmetry", "compare a knot against its mirror and reverse");
  symmetry->add_option("--quandle,-q", o.quandle_file, "quandle file")->required();
  symmetry->add_option("--record", o.record, "quandle record name");
  symmetry->add_option("--braid", o.braid_spec, "inline braid '<strands> <letters> <word...>'");
  symmetry->add_option("--knots", o.knots_file, "knot file");
  symmetry->add_option("--base", o.base, "1-based base element (default 1)");
  symmetry->add_option("--symmetries", o.symmetries, "subset of m,r,rm (default all)");

  CLI::App* sweep = app.add_subcommand("sweep", "symmetry reports for quandle x knot grids");
  sweep->add_option("--quandles", o.quandle_paths, "quandle files or directories of .qnd files")
      ->required();
  sweep->add_option("--knots", o.knots_file, "knot file")->required();
  sweep->add_option("--symmetries", o.symmetries, "subset of m,r,rm (default all)");
  sweep->add_option("--out", o.out_path, "write report lines here");
  sweep->add_option("--workers", o.workers, "worker thread count (default 1)");
  sweep->add_option("--base", o.base, "1-based base element (default 1)");
  sweep->add_option("--max-inn-order", o.max_inn, "skip quandles with |Inn| above this");

  check->callback([&] { quandle_check_lines(o.files, out); });
  info->callback([&] { quandle_info_lines(o.files, out); });

  build_galex->callback([&] {
    const FiniteGroup& g =
        pick_record(read_groups_file(o.group_file), o.group_record, "group", o.group_file);
    const RawAutomorphism& raw = pick_record(read_automorphisms_file(o.auto_file), o.auto_record,
                                             "automorphism", o.auto_file);
    GroupAutomorphism f = automorphism_from_images(g, raw.images);
    std::string name = o.name.empty() ? "galex_" + g.name + "_" + raw.name : o.name;
    Sink sink(o.out_path, out);
    write_quandle(sink.stream(), galex(g, f, name));
  });

  conj->callback([&] {
    const NamedPermGroup& npg =
        pick_record(read_perm_groups_file(o.group_file), o.record, "permgroup", o.group_file);
    std::vector<int> images = parse_int_list(o.element_spec, "element image list");
    Perm x;
    for (int v : images) {
      if (v < 1 || v > npg.group.degree())
        throw Error("Parse", "element image " + std::to_string(v) + " out of range 1.." +
                                 std::to_string(npg.group.degree()));
      x.push_back(v - 1);
    }
    if (!is_permutation(x) || static_cast<int>(x.size()) != npg.group.degree())
      throw Error("Parse", "element images do not form a permutation of degree " +
                               std::to_string(npg.group.degree()));
    if (!npg.group.contains(x))
      throw Error("NotAMember", "the seed element lies outside '" + npg.name + "'");
    std::string name = o.name.empty() ? "conj_" + npg.name : o.name;
    ConjugationQuandle cq = conjugation_quandle(npg.group, x);
    cq.quandle.name = name;
    Sink sink(o.out_path, out);
    write_quandle(sink.stream(), cq.quandle);
  });

  homog->callback([&] {
    const FiniteGroup& g =
        pick_record(read_groups_file(o.group_file), o.group_record, "group", o.group_file);
    const RawAutomorphism& raw = pick_record(read_automorphisms_file(o.auto_file), o.auto_record,
                                             "automorphism", o.auto_file);
    GroupAutomorphism f = automorphism_from_images(g, raw.images);
    Subgroup h = parse_subgroup(g, f, o.subgroup_spec);
    std::string name = o.name.empty() ? "homog_" + g.name : o.name;
    Sink sink(o.out_path, out);
    write_quandle(sink.stream(), homogeneous_quandle(g, h, f, name));
  });

  extract->callback([&] {
    const FiniteGroup& g =
        pick_record(read_groups_file(o.group_file), o.group_record, "group", o.group_file);
    const RawAutomorphism& raw = pick_record(read_automorphisms_file(o.auto_file), o.auto_record,
                                             "automorphism", o.auto_file);
    GroupAutomorphism f = automorphism_from_images(g, raw.images);
    Subgroup lambda = parse_subgroup(g, f, o.subgroup_spec);
    std::string name = o.name.empty() ? "phi_" + g.name : o.name;
    CosetCovering cc = coset_covering(g, f, lambda, name);
    Cocycle phi = extract_cocycle(cc.covering, DeckAction{cc.lambda, cc.deck}, cc.section, name);
    {
      Sink sink(o.out_path, out);
      write_cocycle(sink.stream(), phi);
    }
    if (!o.ext_out.empty()) {
      std::string ext_name = o.ext_name.empty() ? name + "_ext" : o.ext_name;
      ExtensionQuandle ext = extension_quandle(phi, ext_name);
      Sink sink(o.ext_out, out);
      write_quandle(sink.stream(), ext.quandle);
    }
    if (!o.base_out.empty()) {
      Sink sink(o.base_out, out);
      write_quandle(sink.stream(), cc.covering.base);
    }
  });

  ccheck->callback([&] {
    const Quandle& base =
        pick_record(read_quandles_file(o.quandle_file), o.record, "quandle", o.quandle_file);
    const FiniteGroup& coeff =
        pick_record(read_groups_file(o.group_file), o.group_record, "group", o.group_file);
    std::vector<RawCocycle> raws = read_cocycles_file(o.cocycle_file);
    for (const RawCocycle& raw : raws) {
      if (!o.cocycle_record.empty() && raw.name != o.cocycle_record) continue;
      Cocycle c = bind_cocycle(raw, base, coeff);
      out << "OK " << c.name << " base=" << base.name << " coeff=" << coeff.name << "\n";
    }
  });

  auto load_knots = [&]() -> std::vector<BraidWord> {
    if (!o.braid_spec.empty() && !o.knots_file.empty())
      throw Error("Parse", "--braid and --knots are mutually exclusive");
    if (!o.braid_spec.empty()) return {parse_inline_braid(o.braid_spec)};
    if (!o.knots_file.empty()) return read_braids_file(o.knots_file);
    throw Error("Parse", "need --braid or --knots");
  };

  psi_cmd->callback([&] {
    std::vector<Quandle> qs = read_quandles_file(o.quandle_file);
    if (!o.record.empty())
      qs = {pick_record(qs, o.record, "quandle", o.quandle_file)};
    std::vector<BraidWord> knots = load_knots();
    bool single = qs.size() == 1 && knots.size() == 1;
    for (const BraidWord& k : knots) {
      for (const Quandle& q : qs) {
        PsiVector v = psi(q, base_index(o.base, q), k);
        if (single)
          out << "psi=" << format_counts(v.counts) << "\n";
        else
          out << k.name << "\t" << q.name << "\tpsi=" << format_counts(v.counts) << "\n";
      }
    }
  });

  symmetry->callback([&] {
    std::vector<Quandle> qs = read_quandles_file(o.quandle_file);
    if (!o.record.empty())
      qs = {pick_record(qs, o.record, "quandle", o.quandle_file)};
    std::vector<BraidWord> knots = load_knots();
    std::vector<std::string> wanted = parse_symmetries(o.symmetries);
    for (const BraidWord& k : knots)
      for (const Quandle& q : qs)
        out << report_line(symmetry_report(q, base_index(o.base, q), k), wanted) << "\n";
  });

  sweep->callback([&] {
    if (o.workers < 1) throw Error("Parse", "--workers must be at least 1");
    std::vector<Quandle> qs = collect_quandles(o.quandle_paths);
    std::vector<BraidWord> knots = read_braids_file(o.knots_file);
    std::vector<std::string> wanted = parse_symmetries(o.symmetries);
    Sink sink(o.out_path, out);

    std::vector<const Quandle*> kept;
    std::vector<std::string> skipped;
    for (const Quandle& q : qs) {
      if (o.max_inn > 0) {
        unsigned long long inn = inner_group(q).group.order();
        if (inn > static_cast<unsigned long long>(o.max_inn)) {
          skipped.push_back("# skipped " + q.name + " |Inn|=" + std::to_string(inn));
          continue;
        }
      }
      base_index(o.base, q);  // validate up front so workers cannot race on it
      kept.push_back(&q);
    }

    struct Job {
      const Quandle* q;
      const BraidWord* k;
    };
    std::vector<Job> jobs;
    for (const BraidWord& k : knots)
      for (const Quandle* q : kept) jobs.push_back({q, &k});

    std::vector<std::string> lines(jobs.size());
    std::atomic<std::size_t> cursor{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;
    auto work = [&] {
      while (true) {
        std::size_t i = cursor.fetch_add(1);
        if (i >= jobs.size()) return;
        try {
          SymmetryReport rep = symmetry_report(*jobs[i].q, o.base - 1, *jobs[i].k);
          lines[i] = report_line(rep, wanted);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    };
    std::size_t threads = std::min<std::size_t>(o.workers, std::max<std::size_t>(jobs.size(), 1));
    if (threads <= 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
      for (std::thread& t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    for (const std::string& line : skipped) sink.stream() << line << "\n";
    for (const std::string& line : lines) sink.stream() << line << "\n";
  });

  std::vector<std::string> argv_store;
  argv_store.push_back("tanglecolor");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  argv.reserve(argv_store.size());
  for (std::string& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace tc

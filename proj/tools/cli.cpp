#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <optional>

#include "report.hpp"
#include "semikit/blattice.hpp"
#include "semikit/classify.hpp"
#include "semikit/elements.hpp"
#include "semikit/enumerate.hpp"
#include "semikit/error.hpp"
#include "semikit/relations.hpp"
#include "semikit/srt_io.hpp"
#include "semikit/structure.hpp"

namespace semikit::cli {

  namespace {

    namespace fs = std::filesystem;

    // Negative mathematical outcomes rather than bad input.
    bool is_negative_result(ErrorKind kind) {
      switch (kind) {
        case ErrorKind::NotQuasiCompletelyRegular:
        case ErrorKind::NotQuasiSkewRing:
        case ErrorKind::PreconditionFailed:
          return true;
        default:
          return !is_input_error(kind);
      }
    }

    std::string yes_no(bool b) {
      return b ? "true" : "false";
    }

    std::string witness_names(FiniteSemiring const&       s,
                              std::vector<Element> const& w) {
      return format_elements(s, w);
    }

    int cmd_validate(fs::path const& file, std::ostream& out) {
      auto   s      = read_srt(file);
      auto   result = validate_semiring(s);
      Report r;
      r.add("order", s.order());
      r.add("verdict", result.verdict());
      for (auto const& f : result.failures) {
        r.add("failure." + f.law, witness_names(s, f.witness));
      }
      out << r;
      return result.verdict() ? kExitSuccess : kExitNegative;
    }

    // Refuses tables that are not semirings before any analysis.
    bool require_semiring(FiniteSemiring const& s, std::ostream& out) {
      auto result = validate_semiring(s);
      if (result.verdict()) {
        return true;
      }
      Report r;
      r.add("verdict", false);
      for (auto const& f : result.failures) {
        r.add("failure." + f.law, witness_names(s, f.witness));
      }
      out << r;
      return false;
    }

    void add_theorem(Report& r, TheoremReport const& t) {
      for (auto const& c : t.conditions) {
        auto key = "theorem." + t.theorem + "." + c.label;
        r.add(key, yes_no(c.holds));
        r.add(key + ".witness", c.witness);
      }
      r.add("theorem." + t.theorem + ".agreement", t.agreement());
    }

    int cmd_classify(fs::path const& file, bool theorems, std::ostream& out) {
      auto s = read_srt(file);
      if (!require_semiring(s, out)) {
        return kExitNegative;
      }
      Report r;
      r.add("order", s.order());
      r.add("E+", format_set(s, additive_idempotents(s)));
      r.add("Reg+", format_set(s, reg_plus(s)));
      r.add("add-reduct", to_string(reduct_kind(s, Op::Add)));
      r.add("mul-reduct", to_string(reduct_kind(s, Op::Mul)));
      for (Element a = 0; a < s.order(); ++a) {
        auto e   = classify_element(s, a);
        auto key = "element." + s.name(a) + ".";
        r.add(key + "additively-regular", e.additively_regular);
        r.add(key + "additively-completely-regular",
              e.additively_completely_regular);
        r.add(key + "completely-regular", e.completely_regular);
        r.add(key + "quasi-regular-index",
              std::to_string(e.additively_quasi_regular_index));
        r.add(key + "quasi-completely-regular-index",
              e.quasi_completely_regular_index
                  ? std::to_string(*e.quasi_completely_regular_index)
                  : std::string("none"));
        if (e.witness) {
          r.add(key + "witness", s.name(*e.witness));
        }
      }
      auto report = classify(s);
      for (auto c : kAllClasses) {
        auto key = "class." + std::string(class_name(c));
        r.add(key, report.holds(c));
        r.add(key + ".evidence", report[c].evidence);
      }
      bool agree = true;
      if (theorems) {
        for (auto id : kAllTheorems) {
          auto t = verify_equivalence(s, id);
          agree  = agree && t.agreement();
          add_theorem(r, t);
        }
        auto corollary = verify_ideal_corollary(s);
        agree          = agree && corollary.agreement();
        add_theorem(r, corollary);
        if (s.order() <= kStructureSearchBound) {
          auto gc = check_generalized_clifford_theorem(s);
          agree   = agree && gc.agreement();
          add_theorem(r, gc);
        }
        r.add("theorems.agreement", agree);
      }
      out << r;
      return agree ? kExitSuccess : kExitNegative;
    }

    int cmd_decompose(fs::path const&                file,
                      std::optional<fs::path> const& emit,
                      std::ostream&                  out) {
      auto s = read_srt(file);
      if (!require_semiring(s, out)) {
        return kExitNegative;
      }
      auto   d = decompose(s);
      Report r;
      r.add("classes", d.size());
      for (Element a = 0; a < d.size(); ++a) {
        auto key = "class." + std::to_string(a);
        r.add(key, format_set(s, d.classes[a]));
        r.add(key + ".kernel", format_set(s, d.kernels[a]));
        r.add(key + ".idempotent", s.name(d.idempotents[a]));
        r.add(key + ".nil", format_set(s, d.nil_sets[a]));
      }
      for (Element a = 0; a < d.size(); ++a) {
        std::string add, mul;
        for (Element b = 0; b < d.size(); ++b) {
          add += (b ? " " : "") + std::to_string(d.y.add(a, b));
          mul += (b ? " " : "") + std::to_string(d.y.mul(a, b));
        }
        r.add("y.add." + std::to_string(a), add);
        r.add("y.mul." + std::to_string(a), mul);
      }
      r.add("y.b-lattice", is_b_lattice(d.y));
      r.add("J*+", format_partition(s, green_star_plus(s, GreenKind::J)));
      r.add("H*+=J*+",
            green_star_plus(s, GreenKind::H) == green_star_plus(s, GreenKind::J));
      auto idem     = additive_idempotents(s);
      bool commuting = true;
      for (auto e : idem) {
        for (auto f : idem) {
          commuting = commuting && s.add(e, f) == s.add(f, e);
        }
      }
      if (commuting) {
        auto map = psi(s, d);
        for (Element a = 0; a < s.order(); ++a) {
          r.add("psi." + s.name(a), s.name(map(a)));
        }
        r.add("psi-tilde", format_partition(s, psi_tilde(s, d)));
        r.add("psi-homomorphism", check_psi_homomorphism(s, d));
      }
      if (emit) {
        fs::create_directories(*emit);
        std::string manifest = "y y.srt\n";
        write_srt(*emit / "y.srt", d.y);
        for (Element a = 0; a < d.size(); ++a) {
          auto name = "component-" + std::to_string(a) + ".srt";
          write_srt(*emit / name, subsemiring(s, d.classes[a]).semiring);
          manifest += "component " + std::to_string(a) + " " + name
                      + " kernel " + format_set(s, d.kernels[a])
                      + " idempotent " + s.name(d.idempotents[a]) + "\n";
        }
        write_text(*emit / "manifest.txt", manifest);
        r.add("emitted", emit->string());
      }
      out << r;
      return kExitSuccess;
    }

    int cmd_compose(fs::path const& file,
                    fs::path const& output,
                    std::ostream&   out) {
      auto   spec   = read_sbl(file);
      auto   report = validate_spec(spec);
      Report r;
      r.add("spec.verdict", report.verdict());
      for (auto const& f : report.failures) {
        std::string idx;
        for (auto i : f.indices) {
          idx += (idx.empty() ? "" : ",") + spec.y.name(i);
        }
        r.add("spec.failure." + f.condition, "(" + idx + ") " + f.witness);
      }
      if (!report.verdict()) {
        out << r;
        return kExitNegative;
      }
      auto s = compose(spec);
      write_srt(output, s);
      auto reread = read_srt(output);
      r.add("order", s.order());
      r.add("verdict", validate_semiring(reread).verdict());
      r.add("output", output.string());
      out << r;
      return kExitSuccess;
    }

    int cmd_maps(fs::path const& file, std::ostream& out) {
      auto s = read_srt(file);
      if (!require_semiring(s, out)) {
        return kExitNegative;
      }
      auto   d = decompose(s);
      auto   m = search_structure_maps(s, d);
      Report r;
      r.add("classes", d.size());
      for (Element a = 0; a < d.size(); ++a) {
        r.add("class." + std::to_string(a), format_set(s, d.classes[a]));
      }
      r.add("search", m ? "found" : "none");
      if (!m) {
        out << r;
        return kExitNegative;
      }
      for (auto const& [p, f] : m->phi) {
        std::string line;
        for (auto a : d.classes[p.first]) {
          line += (line.empty() ? "" : " ") + s.name(a) + "->" + s.name(f[a]);
        }
        r.add("map." + std::to_string(p.first) + "." + std::to_string(p.second),
              line);
      }
      bool all = true;
      for (auto const& c : check_main_theorem_conditions(s, d, *m)) {
        r.add("condition." + c.label, c.holds);
        if (!c.holds) {
          r.add("condition." + c.label + ".witness", c.witness);
        }
        all = all && c.holds;
      }
      auto v = verify_strong_blattice(s, d, *m);
      r.add("strong-b-lattice", v.reproduces);
      r.add("agreement", v.agreement());
      out << r;
      return all && v.reproduces ? kExitSuccess : kExitNegative;
    }

    int cmd_congruences(fs::path const& file,
                        std::size_t     bound,
                        std::ostream&   out) {
      auto s = read_srt(file);
      if (!require_semiring(s, out)) {
        return kExitNegative;
      }
      Report r;
      for (auto kind : {GreenKind::L,
                        GreenKind::R,
                        GreenKind::H,
                        GreenKind::D,
                        GreenKind::J}) {
        auto c = std::string(1, to_char(kind));
        r.add(c + "+", format_partition(s, green_plus(s, kind)));
        r.add(c + "*+", format_partition(s, green_star_plus(s, kind)));
      }
      auto all = enumerate_congruences(s, bound);
      r.add("count", all.size());
      for (std::size_t i = 0; i < all.size(); ++i) {
        auto key = "congruence." + std::to_string(i);
        r.add(key, format_partition(s, all[i].partition));
        r.add(key + ".idempotent-separating",
              is_idempotent_separating(s, all[i]));
      }
      out << r;
      return kExitSuccess;
    }

    int cmd_enumerate(std::size_t                    order,
                      std::optional<std::string> const& cls,
                      bool                           count_only,
                      std::optional<fs::path> const& dir,
                      std::optional<std::size_t>     sample,
                      std::uint64_t                  seed,
                      std::ostream&                  out) {
      std::optional<SemiringClass> filter;
      if (cls) {
        filter = parse_class_name(*cls);
      }
      auto corpus = sample ? sample_semirings(order, *sample, seed, filter)
                           : enumerate_semirings(order, filter);
      Report r;
      r.add("order", order);
      if (filter) {
        r.add("class", std::string(class_name(*filter)));
      }
      r.add("count", corpus.size());
      if (!count_only) {
        for (auto const& s : corpus) {
          r.add("semiring." + canonical_hash(canonical_form(s)),
                class_flags(s));
        }
      }
      if (dir) {
        write_corpus(*dir, corpus);
        r.add("out", dir->string());
      }
      out << r;
      return kExitSuccess;
    }

    int cmd_counterexample(std::string const&             premise,
                           std::string const&             conclusion,
                           std::size_t                    max_order,
                           std::optional<fs::path> const& dump,
                           std::ostream&                  out) {
      ImplicationQuery q{
          parse_class_name(premise), parse_class_name(conclusion), max_order};
      auto   found = find_counterexample(q);
      Report r;
      r.add("premise", std::string(class_name(q.premise)));
      r.add("conclusion", std::string(class_name(q.conclusion)));
      r.add("max-order", max_order);
      if (!found) {
        r.add("result", "none");
        out << r;
        return kExitSuccess;
      }
      r.add("result", "counterexample");
      r.add("order", found->order());
      r.add("hash", canonical_hash(canonical_form(*found)));
      auto const& w = *found;
      r.add("witness.elements", format_elements(w, all_elements(w.order())));
      for (Op op : {Op::Add, Op::Mul}) {
        for (Element a = 0; a < w.order(); ++a) {
          std::vector<Element> row;
          for (Element b = 0; b < w.order(); ++b) {
            row.push_back(w.apply(op, a, b));
          }
          r.add(std::string("witness.") + (op == Op::Add ? "add." : "mul.")
                    + w.name(a),
                format_elements(w, row));
        }
      }
      if (dump) {
        write_srt(*dump, w);
        r.add("out", dump->string());
      }
      out << r;
      return kExitNegative;
    }

  }  // namespace

  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err) {
    CLI::App app{"Finite semiring toolkit"};
    app.require_subcommand(1);

    std::string file, premise, conclusion, cls;
    fs::path    output, emit, dir, dump;
    bool        theorems = false, count_only = false;
    std::size_t order = 0, max_order = 0, sample = 0,
                bound = kDefaultCongruenceBound;
    std::uint64_t seed = 1;

    auto* validate = app.add_subcommand("validate", "check the semiring laws");
    validate->add_option("file", file, ".srt file")->required();

    auto* classify_cmd =
        app.add_subcommand("classify", "element and class report");
    classify_cmd->add_option("file", file, ".srt file")->required();
    classify_cmd->add_flag("--verify-theorems",
                           theorems,
                           "evaluate every equivalence independently");

    auto* decompose_cmd =
        app.add_subcommand("decompose", "b-lattice of quasi skew-rings");
    decompose_cmd->add_option("file", file, ".srt file")->required();
    decompose_cmd->add_option(
        "--emit-components", emit, "directory for the classes");

    auto* compose_cmd =
        app.add_subcommand("compose", "semiring of a strong b-lattice spec");
    compose_cmd->add_option("file", file, ".sbl file")->required();
    compose_cmd->add_option("-o,--output", output, ".srt output")->required();

    auto* maps = app.add_subcommand("maps", "search structure maps");
    maps->add_option("file", file, ".srt file")->required();

    auto* congruences =
        app.add_subcommand("congruences", "Green's relations and congruences");
    congruences->add_option("file", file, ".srt file")->required();
    congruences->add_option("--bound", bound, "largest carrier to enumerate");

    auto* enumerate = app.add_subcommand("enumerate", "semirings of an order");
    enumerate->add_option("--order", order, "carrier size")->required();
    enumerate->add_option("--class", cls, "keep members of this class");
    enumerate->add_flag("--count-only", count_only, "omit the member list");
    enumerate->add_option("--out", dir, "corpus directory");
    auto* sample_opt =
        enumerate->add_option("--sample", sample, "random sample size");
    enumerate->add_option("--seed", seed, "sampling seed");

    auto* counterexample = app.add_subcommand(
        "counterexample", "semiring in the premise class but not the other");
    counterexample->add_option("--premise", premise)->required();
    counterexample->add_option("--conclusion", conclusion)->required();
    counterexample->add_option("--max-order", max_order)->required();
    counterexample->add_option("-o,--output", dump, ".srt of the witness");

    std::vector<std::string> argv_store{"semikit"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) {
      argv.push_back(a.data());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return kExitSuccess;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << "\n";
      return kExitInput;
    }

    auto optional_path = [](fs::path const& p) {
      return p.empty() ? std::nullopt : std::optional<fs::path>(p);
    };
    try {
      if (validate->parsed()) {
        return cmd_validate(file, out);
      }
      if (classify_cmd->parsed()) {
        return cmd_classify(file, theorems, out);
      }
      if (decompose_cmd->parsed()) {
        return cmd_decompose(file, optional_path(emit), out);
      }
      if (compose_cmd->parsed()) {
        return cmd_compose(file, output, out);
      }
      if (maps->parsed()) {
        return cmd_maps(file, out);
      }
      if (congruences->parsed()) {
        return cmd_congruences(file, bound, out);
      }
      if (enumerate->parsed()) {
        return cmd_enumerate(
            order,
            cls.empty() ? std::nullopt : std::optional<std::string>(cls),
            count_only,
            optional_path(dir),
            sample_opt->count() ? std::optional<std::size_t>(sample)
                                : std::nullopt,
            seed,
            out);
      }
      return cmd_counterexample(
          premise, conclusion, max_order, optional_path(dump), out);
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return is_negative_result(e.kind()) ? kExitNegative : kExitInput;
    } catch (fs::filesystem_error const& e) {
      err << "error: IoError: " << e.what() << "\n";
      return kExitInput;
    }
  }

}  // namespace semikit::cli

#include "fusionlab/cli.hpp"

#include "fusionlab/builtins.hpp"
#include "fusionlab/charp.hpp"
#include "fusionlab/green.hpp"
#include "fusionlab/numerics.hpp"
#include "fusionlab/ring_file.hpp"
#include "fusionlab/structure.hpp"
#include "fusionlab/verlinde.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace fusionlab::cli {

namespace {

/// Failed check with a report already printed.
struct CheckFailed {};

class Table {
public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream &os, const std::string &format) const {
    if (format == "tsv") {
      print_tsv(os, header_);
      for (const auto &r : rows_) print_tsv(os, r);
      return;
    }
    std::vector<std::size_t> width(header_.size(), 0);
    auto measure = [&](const std::vector<std::string> &r) {
      for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], display_width(r[c]));
    };
    measure(header_);
    for (const auto &r : rows_) measure(r);
    print_row(os, header_, width);
    for (const auto &r : rows_) print_row(os, r, width);
  }

private:
  // Counts UTF-8 code points so "⊠" pads as one column.
  static std::size_t display_width(const std::string &s) {
    return static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
  }
  static void print_tsv(std::ostream &os, const std::vector<std::string> &r) {
    for (std::size_t c = 0; c < r.size(); ++c) os << (c ? "\t" : "") << r[c];
    os << '\n';
  }
  static void print_row(std::ostream &os, const std::vector<std::string> &r, const std::vector<std::size_t> &width) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c) line += "  ";
      line += r[c];
      if (c + 1 < r.size()) line.append(width[c] - display_width(r[c]), ' ');
    }
    os << line << '\n';
  }

  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

std::string fixed(double v, int digits = 12) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

RingFile load_ring(const std::string &spec, bool validated = true) {
  if (!spec.empty() && spec[0] == '@') return builtin_ring(spec.substr(1));
  const std::string text = read_text_file(spec);
  return validated ? parse_ring_file(text) : parse_ring_text(text);
}

void print_fusion_table(std::ostream &os, const BasedRing &ring, const std::string &format) {
  std::vector<std::string> header{"⊗"};
  for (const auto &l : ring.labels()) header.push_back(l);
  Table t(header);
  for (std::size_t i = 0; i < ring.size(); ++i) {
    std::vector<std::string> row{ring.label(i)};
    for (std::size_t j = 0; j < ring.size(); ++j) {
      row.push_back(format_element(ring, multiply(ring, ring.basis(i), ring.basis(j))));
    }
    t.add(std::move(row));
  }
  t.print(os, format);
}

std::string indices_to_labels(const BasedRing &ring, const std::vector<std::size_t> &idx) {
  std::string s = "{";
  for (std::size_t a = 0; a < idx.size(); ++a) s += (a ? ", " : "") + ring.label(idx[a]);
  return s + "}";
}

struct Options {
  std::string ring;
  std::string other;
  int p = 0;
  int n = 0;
  std::string element;
  std::string left;
  std::string right;
  std::string dims;
  std::string output;
  std::string format = "table";
  bool table = false;
  double tol = 1e-6;
  int slack = 1;
  std::uint64_t exponent = 0;
};

DimHom resolve_dim(const RingFile &file, const Options &o) {
  if (!o.dims.empty()) {
    if (o.p == 0) throw InputError("--dims requires -p");
    std::istringstream is(o.dims);
    std::vector<Int> residues;
    Int v;
    while (is >> v) residues.push_back(v);
    if (!is.eof()) throw InputError("--dims must be a list of integers");
    return dim_hom(file.ring, residues, o.p);
  }
  if (!file.dim) throw InputError("ring '" + file.ring.name() + "' has no dimension homomorphism; pass -p and --dims");
  if (o.p != 0 && o.p != file.dim->p) {
    throw InputError("ring dimensions are mod " + std::to_string(file.dim->p) + ", not mod " + std::to_string(o.p));
  }
  return *file.dim;
}

// -p, falling back to the prime recorded in the ring file.
int resolve_prime(const RingFile &file, const Options &o) {
  if (o.p != 0) {
    if (!is_prime(o.p)) throw InputError("-p must be a prime");
    return o.p;
  }
  if (file.dim) return file.dim->p;
  throw InputError("ring '" + file.ring.name() + "' records no prime; pass -p");
}

void emit_ring(std::ostream &out, const RingFile &file, const Options &o) {
  if (!o.output.empty()) {
    write_text_file(o.output, write_ring_file(file.ring, file.dim));
    out << "wrote " << file.ring.name() << " (" << file.ring.size() << " basis elements) to " << o.output << '\n';
  }
  if (o.table) {
    print_fusion_table(out, file.ring, o.format);
  } else if (o.output.empty()) {
    out << write_ring_file(file.ring, file.dim);
  }
}

void cmd_check(std::ostream &out, const Options &o) {
  const RingFile file = load_ring(o.ring, false);
  const auto violations = validate(file.ring);
  bool failed = !violations.empty();
  for (const auto &v : violations) out << "violation " << v.axiom << ": " << v.message << '\n';
  if (!failed && file.dim) {
    try {
      std::vector<Int> residues(file.dim->residues.begin(), file.dim->residues.end());
      dim_hom(file.ring, residues, file.dim->p);
    } catch (const InputError &e) {
      out << "violation dimension: " << e.what() << '\n';
      failed = true;
    }
  }
  if (failed) throw CheckFailed{};
  out << "ok " << file.ring.name() << ": " << file.ring.size() << " basis elements, all axioms hold\n";
}

void cmd_mult(std::ostream &out, const Options &o) {
  const RingFile file = load_ring(o.ring);
  const auto x = parse_element(file.ring, o.left);
  const auto y = parse_element(file.ring, o.right);
  out << format_element(file.ring, multiply(file.ring, x, y)) << '\n';
}

void cmd_power(std::ostream &out, const Options &o) {
  const RingFile file = load_ring(o.ring);
  const auto x = parse_element(file.ring, o.element);
  out << format_element(file.ring, power(file.ring, x, o.exponent)) << '\n';
}

void cmd_fpdim(std::ostream &out, const Options &o) {
  const RingFile file = load_ring(o.ring);
  const auto dims = fp_dims(file.ring);
  if (!o.element.empty()) {
    out << fixed(fp_dim_element(parse_element(file.ring, o.element), dims)) << '\n';
    return;
  }
  Table t({"basis", "FPdim"});
  for (std::size_t i = 0; i < file.ring.size(); ++i) t.add({file.ring.label(i), fixed(dims[i])});
  t.print(out, o.format);
  out << "FPdim(C) = " << fixed(fp_dim_category(dims)) << '\n';
}

void cmd_gdim(std::ostream &out, const Options &o) {
  const RingFile file = load_ring(o.ring);
  const DimHom d = resolve_dim(file, o);
  Table t({"basis", "dim mod " + std::to_string(d.p)});
  for (std::size_t i = 0; i < file.ring.size(); ++i) t.add({file.ring.label(i), std::to_string(d(i))});
  t.print(out, o.format);
  const auto reg = regular_dual_element(file.ring);
  out << "dim(C) = " << global_dimension(file.ring, d) << " mod " << d.p << '\n';
  out << "R = " << format_element(file.ring, reg) << '\n';
  out << "dim(R) = " << d(reg) << " mod " << d.p << '\n';
}

void cmd_trace_form(std::ostream &out, const Options &o) {
  const RingFile file = load_ring(o.ring);
  const int p = resolve_prime(file, o);
  const auto g = trace_form_gram(file.ring, p);
  std::vector<std::string> header{"Tr(xy)"};
  for (const auto &l : file.ring.labels()) header.push_back(l);
  Table t(header);
  for (std::size_t i = 0; i < file.ring.size(); ++i) {
    std::vector<std::string> row{file.ring.label(i)};
    for (std::size_t j = 0; j < file.ring.size(); ++j) row.push_back(std::to_string(g(i, j)));
    t.add(std::move(row));
  }
  t.print(out, o.format);
  const bool semisimple = is_semisimple_mod_p(file.ring, p);
  out << "rank = " << rank(g) << " of " << file.ring.size() << '\n';
  out << "semisimple mod " << p << ": " << (semisimple ? "yes" : "no") << '\n';
  if (file.dim && file.dim->p == p) {
    const auto gd = global_dimension(file.ring, *file.dim);
    out << "dim(C) = " << gd << " mod " << p << '\n';
    if (!semisimple && gd != 0) {
      out << "observation: dim(C) != 0 although the trace form is degenerate\n";
    }
  }
}

void cmd_pthpow(std::ostream &out, const Options &o) {
  const RingFile file = load_ring(o.ring);
  const auto x = parse_element(file.ring, o.element);
  const int p = resolve_prime(file, o);
  out << format_element(file.ring, pth_power(file.ring, x, p)) << " (mod " << p << ")\n";
}

void cmd_frobenius(std::ostream &out, const Options &o) {
  const RingFile file = load_ring(o.ring);
  const std::size_t i = file.ring.index_of(o.element);
  const auto dims = fp_dims(file.ring);
  const auto found = frobenius_candidates(file.ring, i, o.p, dims, {o.tol, o.slack});
  Table t({"#", "Fr(" + o.element + ") in " + file.ring.name() + " ⊠ Ver" + std::to_string(o.p)});
  for (std::size_t a = 0; a < found.size(); ++a) t.add({std::to_string(a + 1), format_frobenius_row(file.ring, found[a])});
  t.print(out, o.format);
  out << found.size() << (found.size() == 1 ? " candidate\n" : " candidates\n");
}

void cmd_frobtype(std::ostream &out, const Options &o) {
  if (o.ring.empty()) {
    const auto table = verlinde_frobenius_table(o.p);
    const auto ver = verlinde_ring(o.p);
    for (std::size_t s = 0; s < table.rows.size(); ++s) {
      out << "Fr(" << ver.ring.label(s) << ") = " << format_frobenius_row(ver.ring, table.rows[s]) << '\n';
    }
    out << "Frobenius type: " << to_string(frobenius_type(table, o.p)) << '\n';
    return;
  }
  const RingFile file = load_ring(o.ring);
  const auto dims = fp_dims(file.ring);
  FrobeniusTable table{o.p, {}};
  bool ambiguous = false;
  for (std::size_t i = 0; i < file.ring.size(); ++i) {
    const auto found = frobenius_candidates(file.ring, i, o.p, dims, {o.tol, o.slack});
    if (found.size() == 1) {
      out << "Fr(" << file.ring.label(i) << ") = " << format_frobenius_row(file.ring, found.front()) << '\n';
      table.rows.push_back(found.front());
    } else {
      out << "Fr(" << file.ring.label(i) << "): " << found.size() << " candidates\n";
      ambiguous = true;
    }
  }
  if (ambiguous) {
    out << "Frobenius type: undetermined (candidates are not unique)\n";
    throw CheckFailed{};
  }
  out << "Frobenius type: " << to_string(frobenius_type(table, o.p)) << '\n';
}

void cmd_subrings(std::ostream &out, const Options &o) {
  const RingFile file = load_ring(o.ring);
  const auto subs = enumerate_subrings(file.ring);
  Table t({"#", "size", "basis"});
  for (std::size_t a = 0; a < subs.size(); ++a) {
    t.add({std::to_string(a + 1), std::to_string(subs[a].size()), indices_to_labels(file.ring, subs[a].indices)});
  }
  t.print(out, o.format);
  out << subs.size() << " subrings\n";
}

void cmd_grading(std::ostream &out, const Options &o) {
  const RingFile file = load_ring(o.ring);
  const auto g = universal_grading(file.ring);
  out << "group order " << g.group.order() << '\n';
  Table t({"basis", "grade"});
  for (std::size_t i = 0; i < file.ring.size(); ++i) t.add({file.ring.label(i), "g" + std::to_string(g.grade[i])});
  t.print(out, o.format);
  std::vector<std::string> header{"*"};
  for (std::size_t a = 0; a < g.group.order(); ++a) header.push_back("g" + std::to_string(a));
  Table mt(header);
  for (std::size_t a = 0; a < g.group.order(); ++a) {
    std::vector<std::string> row{"g" + std::to_string(a)};
    for (std::size_t b = 0; b < g.group.order(); ++b) row.push_back("g" + std::to_string(g.group.multiply(a, b)));
    mt.add(std::move(row));
  }
  mt.print(out, o.format);
  out << "adjoint subring " << indices_to_labels(file.ring, g.adjoint.indices) << '\n';
}

void cmd_grim(std::ostream &out, const Options &o) {
  const RingFile file = load_ring(o.ring);
  const DimHom d = resolve_dim(file, o);
  const auto g = universal_grading(file.ring);
  const auto report = graded_dimension_identity(file.ring, d, g);
  Table t({"grade", "D_g", "dim(C_g)"});
  for (std::size_t a = 0; a < report.group_order; ++a) {
    t.add({"g" + std::to_string(a), format_element(file.ring, report.class_sums[a]),
           std::to_string(report.class_dimensions[a])});
  }
  t.print(out, o.format);
  out << "dim(C) = " << report.total << ", |G| dim(C_1) = " << report.group_order << "*" << report.neutral
      << " = " << (report.group_order * report.neutral) % static_cast<std::size_t>(d.p) << " mod " << d.p << '\n';
  out << "identity " << (report.holds ? "holds" : "fails") << '\n';
  if (!report.holds) throw CheckFailed{};
}

void cmd_iso(std::ostream &out, const Options &o) {
  const RingFile a = load_ring(o.ring);
  const RingFile b = load_ring(o.other);
  const auto sigma = find_isomorphism(a.ring, b.ring);
  if (!sigma) {
    out << "no isomorphism " << a.ring.name() << " -> " << b.ring.name() << '\n';
    throw CheckFailed{};
  }
  Table t({a.ring.name(), b.ring.name()});
  for (std::size_t i = 0; i < a.ring.size(); ++i) t.add({a.ring.label(i), b.ring.label((*sigma)[i])});
  t.print(out, o.format);
}

void cmd_homs(std::ostream &out, const Options &o) {
  const RingFile source = load_ring(o.ring);
  const BasedRing target = o.other.empty() ? verlinde_ring(o.p).ring : load_ring(o.other).ring;
  const auto homs = find_based_homs(source.ring, target, o.tol);
  out << homs.size() << (homs.size() == 1 ? " based homomorphism " : " based homomorphisms ") << source.ring.name() << " -> " << target.name() << '\n';
  for (std::size_t h = 0; h < homs.size(); ++h) {
    out << "hom " << h + 1 << ":";
    for (std::size_t i = 0; i < source.ring.size(); ++i) {
      out << (i ? ", " : " ") << source.ring.label(i) << " -> " << format_element(target, homs[h].images[i]);
    }
    out << '\n';
  }
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"fusionlab: based rings of symmetric fusion categories in characteristic p", "fusionlab"};
  app.require_subcommand(1);
  Options o;

  auto add_ring = [&](CLI::App *c, bool required = true) {
    auto *opt = c->add_option("--ring", o.ring, "ring file, or @builtin (@ver7, @green5, @group4, @yanglee, ...)");
    if (required) opt->required();
  };
  auto add_format = [&](CLI::App *c) {
    c->add_option("--format", o.format, "table or tsv")->check(CLI::IsMember({"table", "tsv"}));
  };
  auto add_prime = [&](CLI::App *c, bool required) {
    auto *opt = c->add_option("-p,--prime", o.p, "prime characteristic");
    if (required) opt->required();
  };
  auto add_ring_output = [&](CLI::App *c) {
    c->add_option("-o,--output", o.output, "write the ring file here");
    c->add_flag("--table", o.table, "print the fusion table");
    add_format(c);
  };

  auto *check = app.add_subcommand("check", "validate the based-ring axioms of a ring file");
  add_ring(check);

  auto *green = app.add_subcommand("green", "Green ring of C_p");
  add_prime(green, true);
  add_ring_output(green);

  auto *verlinde = app.add_subcommand("verlinde", "universal Verlinde ring Ver_p");
  add_prime(verlinde, true);
  add_ring_output(verlinde);

  auto *groupring = app.add_subcommand("groupring", "group ring of Z/n");
  groupring->add_option("-n", o.n, "group order")->required();
  add_ring_output(groupring);

  auto *yanglee = app.add_subcommand("yanglee", "Yang-Lee ring X^2 = 1 + X");
  add_ring_output(yanglee);

  auto *boxprod = app.add_subcommand("boxprod", "external product of two rings");
  add_ring(boxprod);
  boxprod->add_option("--with", o.other, "second factor")->required();
  add_ring_output(boxprod);

  auto *mult = app.add_subcommand("mult", "multiply two elements");
  add_ring(mult);
  mult->add_option("--left", o.left, "left factor, e.g. 2*L1+L3")->required();
  mult->add_option("--right", o.right, "right factor")->required();

  auto *pow = app.add_subcommand("power", "integer power of an element");
  add_ring(pow);
  pow->add_option("--element", o.element, "element")->required();
  pow->add_option("-n", o.exponent, "exponent")->required();

  auto *fpdim = app.add_subcommand("fpdim", "Frobenius-Perron dimensions");
  add_ring(fpdim);
  fpdim->add_option("--element", o.element, "element (default: every basis element)");
  add_format(fpdim);

  auto *gdim = app.add_subcommand("gdim", "global dimension mod p and the element R");
  add_ring(gdim);
  add_prime(gdim, false);
  gdim->add_option("--dims", o.dims, "dimension residues in basis order");
  add_format(gdim);

  auto *trace = app.add_subcommand("trace-form", "trace form Tr(xy) mod p and semisimplicity");
  add_ring(trace);
  add_prime(trace, false);
  add_format(trace);

  auto *pthpow = app.add_subcommand("pthpow", "x^p mod p");
  add_ring(pthpow);
  add_prime(pthpow, false);
  pthpow->add_option("--element", o.element, "element")->required();

  auto *frob = app.add_subcommand("frobenius", "Frobenius image candidates of a basis element");
  add_ring(frob);
  add_prime(frob, true);
  frob->add_option("--element", o.element, "basis label")->required();
  frob->add_option("--tol", o.tol, "FPdim tolerance");
  frob->add_option("--slack", o.slack, "extra terms allowed beyond ceil(FPdim)");
  add_format(frob);

  auto *frobtype = app.add_subcommand("frobtype", "Frobenius type (Vec, sVec, Ver_p^+, Ver_p)");
  add_ring(frobtype, false);
  add_prime(frobtype, true);
  frobtype->add_option("--tol", o.tol, "FPdim tolerance");
  frobtype->add_option("--slack", o.slack, "extra terms allowed beyond ceil(FPdim)");

  auto *subrings = app.add_subcommand("subrings", "all based subrings");
  add_ring(subrings);
  add_format(subrings);

  auto *grading = app.add_subcommand("grading", "universal grading");
  add_ring(grading);
  add_format(grading);

  auto *grim = app.add_subcommand("grim", "check dim(C) = |G| dim(C_1) for the universal grading");
  add_ring(grim);
  add_prime(grim, false);
  grim->add_option("--dims", o.dims, "dimension residues in basis order");
  add_format(grim);

  auto *iso = app.add_subcommand("iso", "based-ring isomorphism search");
  add_ring(iso);
  iso->add_option("--with", o.other, "second ring")->required();
  add_format(iso);

  auto *homs = app.add_subcommand("homs", "FPdim-preserving based homomorphisms");
  add_ring(homs);
  homs->add_option("--target", o.other, "target ring (default Ver_p)");
  add_prime(homs, false);
  homs->add_option("--tol", o.tol, "FPdim tolerance");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInputError;
  }

  try {
    if (*check) cmd_check(out, o);
    else if (*green) emit_ring(out, builtin_ring("green" + std::to_string(o.p)), o);
    else if (*verlinde) emit_ring(out, builtin_ring("ver" + std::to_string(o.p)), o);
    else if (*groupring) emit_ring(out, builtin_ring("group" + std::to_string(o.n)), o);
    else if (*yanglee) emit_ring(out, builtin_ring("yanglee"), o);
    else if (*boxprod) {
      const auto a = load_ring(o.ring);
      const auto b = load_ring(o.other);
      emit_ring(out, RingFile{box_product(a.ring, b.ring), std::nullopt}, o);
    } else if (*mult) cmd_mult(out, o);
    else if (*pow) cmd_power(out, o);
    else if (*fpdim) cmd_fpdim(out, o);
    else if (*gdim) cmd_gdim(out, o);
    else if (*trace) cmd_trace_form(out, o);
    else if (*pthpow) cmd_pthpow(out, o);
    else if (*frob) cmd_frobenius(out, o);
    else if (*frobtype) cmd_frobtype(out, o);
    else if (*subrings) cmd_subrings(out, o);
    else if (*grading) cmd_grading(out, o);
    else if (*grim) cmd_grim(out, o);
    else if (*iso) cmd_iso(out, o);
    else if (*homs) {
      if (o.other.empty() && o.p == 0) throw InputError("homs needs --target or -p");
      cmd_homs(out, o);
    }
  } catch (const CheckFailed &) {
    return kExitCheckFailed;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitOk;
}

} // namespace fusionlab::cli

// Command-line surface: verify / torsion / family / search / evidence.
// Exit codes: 0 success or positive result, 1 negative domain result
// (invalid triple, degenerate parameter), 2 usage or parse error, 3 I/O
// failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "diocurve/errors.hpp"
#include "diocurve/families.hpp"
#include "diocurve/rank_search.hpp"
#include "diocurve/search.hpp"
#include "diocurve/torsion.hpp"
#include "diocurve/triple.hpp"

namespace {

using diocurve::CandidateRecord;
using diocurve::Rat;
using diocurve::Triple;
using ordered_json = nlohmann::ordered_json;

enum class Format { text, json, csv };

struct CommonOpts {
  std::string format = "text";
  std::string out_path;
  bool verbose = false;
};

Format parse_format(const std::string& f, bool csv_allowed) {
  if (f == "text") return Format::text;
  if (f == "json") return Format::json;
  if (f == "csv") {
    if (!csv_allowed)
      throw diocurve::ParseError("csv format is only available for search");
    return Format::csv;
  }
  throw diocurve::ParseError("unknown format: " + f);
}

// Output sink: stdout by default, --out file otherwise.
class Out {
 public:
  explicit Out(const std::string& path, std::ios_base::openmode mode) {
    if (!path.empty()) {
      file_.open(path, mode);
      if (!file_)
        throw std::ios_base::failure("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string sign_str(int s) { return s > 0 ? "+" : "-"; }

ordered_json triple_json(const Triple& tr) {
  ordered_json j;
  j["a"] = tr.a().str();
  j["b"] = tr.b().str();
  j["c"] = tr.c().str();
  return j;
}

int cmd_verify(const std::string& sa, const std::string& sb,
               const std::string& sc, const CommonOpts& opts) {
  Format fmt = parse_format(opts.format, false);
  Out out(opts.out_path, std::ios_base::out);
  Rat a = Rat::parse(sa), b = Rat::parse(sb), c = Rat::parse(sc);
  std::optional<Triple> tr;
  std::string error;
  try {
    tr = Triple::validate(a, b, c);
  } catch (const diocurve::InvalidTriple& e) {
    error = e.what();
  }
  if (fmt == Format::json) {
    ordered_json j;
    j["a"] = a.str();
    j["b"] = b.str();
    j["c"] = c.str();
    j["valid"] = tr.has_value();
    if (tr) {
      j["r"] = tr->r().str();
      j["s"] = tr->s().str();
      j["t"] = tr->t().str();
      auto sp = diocurve::sign_pattern(*tr);
      j["signs"] = {sign_str(sp[0]), sign_str(sp[1]), sign_str(sp[2])};
      auto reg = diocurve::is_regular(*tr);
      j["regular"] = reg.regular;
      j["regular_sign"] = reg.regular ? sign_str(reg.sign) : "";
    } else {
      j["error"] = error;
    }
    out.stream() << j.dump() << "\n";
    return tr ? 0 : 1;
  }
  if (!tr) {
    out.stream() << "invalid: " << error << "\n";
    return 1;
  }
  auto sp = diocurve::sign_pattern(*tr);
  auto reg = diocurve::is_regular(*tr);
  out.stream() << "valid rational Diophantine triple " << tr->str() << "\n"
               << "r, s, t = " << tr->r() << ", " << tr->s() << ", "
               << tr->t() << "\n"
               << "signs: (" << sign_str(sp[0]) << "," << sign_str(sp[1])
               << "," << sign_str(sp[2]) << ")\n";
  if (reg.regular)
    out.stream() << "regular: yes (c = a + b " << (reg.sign > 0 ? "+" : "-")
                 << " 2r)\n";
  else
    out.stream() << "regular: no\n";
  return 0;
}

ordered_json torsion_json(const Triple& tr) {
  diocurve::Curve curve = diocurve::induced_curve(tr);
  diocurve::CanonicalPoints pts = diocurve::canonical_points(tr);
  diocurve::OrderConsistency oc = diocurve::order_consistency(tr);
  diocurve::TorsionReport rep = diocurve::classify_triple_detailed(tr);
  diocurve::Lemma4SFactors f4 = diocurve::lemma_4S_factors(tr);
  ordered_json j;
  j["triple"] = triple_json(tr);
  j["curve_shifts"] = {(tr.a() * tr.b()).str(), (tr.a() * tr.c()).str(),
                       (tr.b() * tr.c()).str()};
  ordered_json orders;
  orders["A"] = diocurve::order_of(curve, pts.A).str();
  orders["B"] = diocurve::order_of(curve, pts.B).str();
  orders["C"] = diocurve::order_of(curve, pts.C).str();
  orders["P"] = diocurve::order_of(curve, pts.P).str();
  orders["S"] = oc.s_order.str();
  orders["R"] = diocurve::order_of(curve, pts.R).str();
  j["orders"] = orders;
  j["lemma_2S"] = oc.l2;
  j["lemma_3S_value"] = diocurve::lemma_3S_value(tr).str();
  j["lemma_4S_factors"] = {f4.f1.str(), f4.f2.str(), f4.f3.str()};
  j["torsion"] = to_string(rep.cls);
  j["three_part_witnessed"] = rep.three_part_witnessed;
  j["order8_witnessed"] = rep.order8_witnessed;
  j["consistent"] = oc.consistent();
  j["j_invariant"] = diocurve::j_invariant(curve).str();
  return j;
}

std::string shift_term(const Rat& shift) {
  if (shift.sign() < 0) return "(x - " + (-shift).str() + ")";
  return "(x + " + shift.str() + ")";
}

void print_torsion_text(std::ostream& os, const Triple& tr) {
  diocurve::Curve curve = diocurve::induced_curve(tr);
  diocurve::CanonicalPoints pts = diocurve::canonical_points(tr);
  diocurve::OrderConsistency oc = diocurve::order_consistency(tr);
  diocurve::TorsionReport rep = diocurve::classify_triple_detailed(tr);
  diocurve::Lemma4SFactors f4 = diocurve::lemma_4S_factors(tr);
  os << "triple: " << tr.str() << "\n"
     << "curve: y^2 = " << shift_term(tr.a() * tr.b())
     << shift_term(tr.a() * tr.c()) << shift_term(tr.b() * tr.c()) << "\n"
     << "orders: A'=" << diocurve::order_of(curve, pts.A).str()
     << " B'=" << diocurve::order_of(curve, pts.B).str()
     << " C'=" << diocurve::order_of(curve, pts.C).str()
     << " P'=" << diocurve::order_of(curve, pts.P).str()
     << " S'=" << oc.s_order.str()
     << " R'=" << diocurve::order_of(curve, pts.R).str() << "\n"
     << "lemma 2S: " << (oc.l2 ? "true" : "false") << "\n"
     << "lemma 3S value: " << diocurve::lemma_3S_value(tr) << "\n"
     << "lemma 4S factors: " << f4.f1 << ", " << f4.f2 << ", " << f4.f3
     << "\n"
     << "torsion: " << to_string(rep.cls)
     << " (3-part witnessed: " << (rep.three_part_witnessed ? "yes" : "no")
     << ", order-8 point: " << (rep.order8_witnessed ? "yes" : "no") << ")\n"
     << "consistency: " << (oc.consistent() ? "OK" : "MISMATCH") << "\n"
     << "j-invariant: " << diocurve::j_invariant(curve) << "\n";
  if (!oc.consistent())
    for (const std::string& m : oc.mismatches) os << "  mismatch: " << m << "\n";
}

int cmd_torsion(const std::string& sa, const std::string& sb,
                const std::string& sc, const CommonOpts& opts) {
  Format fmt = parse_format(opts.format, false);
  Out out(opts.out_path, std::ios_base::out);
  Triple tr = Triple::validate(Rat::parse(sa), Rat::parse(sb), Rat::parse(sc));
  if (fmt == Format::json)
    out.stream() << torsion_json(tr).dump() << "\n";
  else
    print_torsion_text(out.stream(), tr);
  return 0;
}

int cmd_family(const std::string& tag, const std::vector<std::string>& params,
               const CommonOpts& opts) {
  Format fmt = parse_format(opts.format, false);
  Out out(opts.out_path, std::ios_base::out);
  diocurve::FamilyTag ft;
  size_t want = 1;
  if (tag == "mixed") {
    ft = diocurve::FamilyTag::MixedSign;
    want = 2;
  } else if (tag == "z2z6a") {
    ft = diocurve::FamilyTag::Z2Z6a;
  } else if (tag == "z2z6t") {
    ft = diocurve::FamilyTag::Z2Z6t;
  } else if (tag == "z2z8") {
    ft = diocurve::FamilyTag::Z2Z8T;
  } else {
    throw diocurve::ParseError("unknown family tag: " + tag +
                               " (expected mixed|z2z6a|z2z6t|z2z8)");
  }
  if (params.size() != want)
    throw diocurve::ParseError("family " + tag + " takes " +
                               std::to_string(want) + " parameter(s)");
  std::array<Rat, 2> ps{Rat(0), Rat(0)};
  for (size_t i = 0; i < params.size(); ++i) ps[i] = Rat::parse(params[i]);
  Triple tr = diocurve::make_family(ft, ps);
  if (fmt == Format::json) {
    ordered_json j;
    j["family"] = tag;
    ordered_json pj = ordered_json::array();
    for (size_t i = 0; i < params.size(); ++i) pj.push_back(ps[i].str());
    j["params"] = pj;
    j["report"] = torsion_json(tr);
    out.stream() << j.dump() << "\n";
  } else {
    out.stream() << "family " << tag << "(";
    for (size_t i = 0; i < params.size(); ++i)
      out.stream() << (i ? ", " : "") << ps[i];
    out.stream() << ") -> " << tr.str() << "\n";
    print_torsion_text(out.stream(), tr);
  }
  return 0;
}

std::string record_text_line(const CandidateRecord& rec) {
  if (rec.skipped) {
    std::string line = "n=" + std::to_string(rec.n) + " skip";
    if (rec.r) line += " (r=" + rec.r->str() + ")";
    return line + ": " + rec.skip_reason;
  }
  std::string line = "n=" + std::to_string(rec.n) + " candidate [" +
                     to_string(*rec.root_branch) + "] r=" + rec.r->str();
  line += rec.all_positive ? " all-positive" : " mixed-sign";
  line += " a=" + rec.triple->a().str() + " b=" + rec.triple->b().str() +
          " c=" + rec.triple->c().str() + " torsion=" +
          to_string(*rec.torsion) + " s_order=" + rec.s_order->str();
  return line;
}

// Highest n already present in a record stream (resume point).
long resume_point(const std::string& path, Format fmt) {
  std::ifstream in(path);
  if (!in) return 0;
  long max_n = 0;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (fmt == Format::csv && first) {
      first = false;
      if (line == diocurve::csv_header()) continue;
    }
    first = false;
    long n = 0;
    if (fmt == Format::json) {
      n = diocurve::record_from_json_line(line).n;
    } else {
      // text/csv lines carry n up front: "n=K ..." / "K,...".
      size_t start = (fmt == Format::text) ? 2 : 0;
      n = std::stol(line.substr(start));
    }
    if (n > max_n) max_n = n;
  }
  return max_n;
}

int cmd_search(long max_n, const CommonOpts& opts) {
  Format fmt = parse_format(opts.format, true);
  long from = 1;
  bool fresh_csv_header = fmt == Format::csv;
  if (!opts.out_path.empty()) {
    std::ifstream probe(opts.out_path);
    if (probe.good()) {
      try {
        from = resume_point(opts.out_path, fmt) + 1;
      } catch (const std::exception& e) {
        throw std::ios_base::failure("cannot resume from " + opts.out_path +
                                     ": " + e.what());
      }
      if (from > 1) fresh_csv_header = false;
    }
  }
  Out out(opts.out_path, std::ios_base::app);
  if (from > max_n) {
    std::cerr << "nothing to do: " << opts.out_path << " already covers n <= "
              << (from - 1) << "\n";
    return 0;
  }
  if (fresh_csv_header) out.stream() << diocurve::csv_header() << "\n";
  long candidates = 0, skips = 0, mixed = 0;
  diocurve::E1Context ctx;
  diocurve::scan_range(
      ctx, from, max_n, opts.verbose, [&](const CandidateRecord& rec) {
        if (rec.skipped) ++skips;
        else if (rec.all_positive) ++candidates;
        else ++mixed;
        std::ostream& os = out.stream();
        if (fmt == Format::json) os << diocurve::to_json_line(rec) << "\n";
        else if (fmt == Format::csv) os << diocurve::to_csv_line(rec) << "\n";
        else os << record_text_line(rec) << "\n";
        if (!os) throw std::ios_base::failure("write failed");
      });
  std::cerr << "scan complete: n in [" << from << "," << max_n << "], "
            << candidates << " all-positive candidate(s), " << mixed
            << " mixed-sign record(s), " << skips << " skip(s)\n";
  return 0;
}

int cmd_evidence(const std::string& sa, const std::string& sb,
                 const std::string& sc, long height, const CommonOpts& opts) {
  Format fmt = parse_format(opts.format, false);
  Out out(opts.out_path, std::ios_base::out);
  Triple tr = Triple::validate(Rat::parse(sa), Rat::parse(sb), Rat::parse(sc));
  diocurve::Curve curve = diocurve::induced_curve(tr);
  diocurve::EvidenceReport rep = diocurve::rank_evidence(curve, height);
  if (fmt == Format::json) {
    ordered_json j;
    j["triple"] = triple_json(tr);
    j["height_bound"] = rep.height_bound;
    auto dump_points = [](const std::vector<diocurve::FoundPoint>& v) {
      ordered_json arr = ordered_json::array();
      for (const auto& f : v) {
        ordered_json p;
        p["x"] = f.pt.x().str();
        p["y"] = f.pt.y().str();
        p["order"] = f.order.str();
        arr.push_back(p);
      }
      return arr;
    };
    j["torsion_points"] = dump_points(rep.torsion);
    j["infinite_order_points"] = dump_points(rep.infinite);
    j["rank_ge_1"] = rep.rank_ge_1();
    out.stream() << j.dump() << "\n";
    return 0;
  }
  std::ostream& os = out.stream();
  os << "curve induced by " << tr.str() << ", height bound " << height
     << "\n";
  os << "torsion points found: " << rep.torsion.size() << "\n";
  for (const auto& f : rep.torsion)
    os << "  (" << f.pt.x() << ", " << f.pt.y() << ") order "
       << f.order.str() << "\n";
  os << "infinite-order points found: " << rep.infinite.size() << "\n";
  for (const auto& f : rep.infinite)
    os << "  (" << f.pt.x() << ", " << f.pt.y() << ")\n";
  if (rep.rank_ge_1())
    os << "conclusion: rank >= 1 (infinite-order point found)\n";
  else
    os << "conclusion: no non-torsion point up to bound " << height
       << " (not a rank-0 proof)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic for rational Diophantine triples and the "
               "elliptic curves they induce"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string a, b, c, family_tag;
  std::vector<std::string> family_params;
  long max_n = 1, height = 1;

  auto add_common = [&opts](CLI::App* sub, bool csv) {
    sub->add_option("--format", opts.format,
                    csv ? "Output format: text|json|csv"
                        : "Output format: text|json")
        ->default_val("text");
    sub->add_option("--out", opts.out_path, "Write output to this file");
    sub->add_flag("--verbose", opts.verbose,
                  "Emit full records for mixed-sign triples (search)");
  };

  CLI::App* verify = app.add_subcommand("verify", "Validate a triple");
  verify->add_option("a", a)->required();
  verify->add_option("b", b)->required();
  verify->add_option("c", c)->required();
  add_common(verify, false);

  CLI::App* torsion = app.add_subcommand(
      "torsion", "Classify the torsion group of the induced curve");
  torsion->add_option("a", a)->required();
  torsion->add_option("b", b)->required();
  torsion->add_option("c", c)->required();
  add_common(torsion, false);

  CLI::App* family = app.add_subcommand(
      "family", "Generate a family triple and classify it");
  family->add_option("tag", family_tag, "mixed|z2z6a|z2z6t|z2z8")->required();
  family->add_option("params", family_params, "Family parameters")
      ->expected(1, 2);
  add_common(family, false);

  CLI::App* search = app.add_subcommand(
      "search", "Scan multiples of the generator for all-positive triples");
  search->add_option("--max-n", max_n, "Largest multiple to scan")
      ->required()
      ->check(CLI::PositiveNumber);
  add_common(search, true);

  CLI::App* evidence = app.add_subcommand(
      "evidence", "Bounded point search on the induced curve");
  evidence->add_option("a", a)->required();
  evidence->add_option("b", b)->required();
  evidence->add_option("c", c)->required();
  evidence->add_option("--height", height, "Height bound for x = p/q")
      ->required()
      ->check(CLI::PositiveNumber);
  add_common(evidence, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*verify) return cmd_verify(a, b, c, opts);
    if (*torsion) return cmd_torsion(a, b, c, opts);
    if (*family) return cmd_family(family_tag, family_params, opts);
    if (*search) return cmd_search(max_n, opts);
    if (*evidence) return cmd_evidence(a, b, c, height, opts);
  } catch (const diocurve::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return 3;
  } catch (const diocurve::InvalidTriple& e) {
    std::cerr << "invalid triple: " << e.what() << "\n";
    return 1;
  } catch (const diocurve::DegenerateParameter& e) {
    std::cerr << "degenerate parameter: " << e.what() << "\n";
    return 1;
  } catch (const diocurve::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;  // no subcommand (unreachable: require_subcommand)
}

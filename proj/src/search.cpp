#include "diocurve/search.hpp"

#include <json.hpp>

#include "diocurve/errors.hpp"
#include "diocurve/families.hpp"

namespace diocurve {

E1Context::E1Context()
    : curve_(Curve::from_cubic(Rat(1), Rat(1), Rat(1))),
      ladder_{Point::affine(Rat(0), Rat(1))} {}

const Point& E1Context::multiple(long n) {
  if (n < 1) throw DomainError("e1 multiple index must be >= 1");
  while (static_cast<long>(ladder_.size()) < n)
    ladder_.push_back(add(curve_, ladder_.back(), ladder_.front()));
  return ladder_[static_cast<size_t>(n - 1)];
}

static_assert(kMapSign == 1 || kMapSign == -1);
static_assert(!kMapTranslateByT1,
              "point_to_r applies no T1 translation; retune the anchors "
              "before flipping this");

std::optional<Rat> point_to_r(const Point& pt_on_E1) {
  if (pt_on_E1.is_identity()) return std::nullopt;
  Rat denom = pt_on_E1.x() * pt_on_E1.x() + Rat(1);
  return Rat(kMapSign) * pt_on_E1.y() / denom;
}

Rat quartic_disc(const Rat& r) {
  Rat r2 = r * r;
  return Rat(1) - Rat(4) * r2 * r2 + Rat(4) * r2;
}

Point r_to_point(const E1Context& ctx, const Rat& r) {
  if (r.is_zero()) throw DegenerateParameter("r_to_point: r = 0");
  Rat d = sqrt_exact(quartic_disc(r));  // throws NotASquare when off the quartic
  Rat x = (d + Rat(1)) / (Rat(2) * r * r);
  Rat y = r * (x * x + Rat(1));
  Point pt = Point::affine(std::move(x), std::move(y));
  if (!on_curve(ctx.curve(), pt))
    throw Error("r_to_point produced a point off E1");  // unreachable
  return pt;
}

std::string to_string(RootBranch b) {
  return b == RootBranch::plus ? "plus" : "minus";
}

std::vector<RootTriple> r_to_triples(const Rat& r) {
  if (r.is_zero() || r == Rat(1) || r == Rat(-1))
    throw DegenerateParameter("r_to_triples: quadratic degenerates at r = " +
                              r.str());
  Rat r2 = r * r;
  Rat A = Rat(2) * r * (r2 - Rat(1));
  Rat B = Rat(4) * r2 * r2 - Rat(6) * r2 + Rat(1);
  Rat C = Rat(2) * r * (r2 * r2 - Rat(2) * r2 + Rat(1));
  Rat disc = B * B - Rat(4) * A * C;  // == quartic_disc(r) identically
  if (!is_perfect_square(disc)) return {};
  Rat D = sqrt_exact(disc);
  std::vector<RootTriple> out;
  auto try_root = [&](RootBranch branch, const Rat& a) {
    Rat b = (r2 - Rat(1)) / a;  // a ≠ 0: the constant term C is nonzero here
    Rat c = a + b + Rat(2) * r;
    try {
      out.push_back(RootTriple{branch, a, Triple::validate(a, b, c)});
    } catch (const InvalidTriple&) {
      // Collided or vanishing element; this root yields no triple.
    }
  };
  try_root(RootBranch::plus, (-B + D) / (Rat(2) * A));
  if (!D.is_zero()) try_root(RootBranch::minus, (-B - D) / (Rat(2) * A));
  return out;
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json rat_or_null(const std::optional<Rat>& v) {
  if (!v) return nullptr;
  return v->str();
}

CandidateRecord classify_into_record(long n, const Rat& r,
                                     const RootTriple& rt) {
  CandidateRecord rec;
  rec.n = n;
  rec.r = r;
  rec.root_branch = rt.branch;
  Triple tr = rt.triple;
  bool same = all_same_sign(tr);
  if (same && tr.a().sign() < 0)
    tr = Triple::validate(-tr.a(), -tr.b(), -tr.c());
  rec.triple = tr;
  rec.all_positive = same;
  Curve curve = induced_curve(tr);
  CanonicalPoints pts = canonical_points(tr);
  rec.s_order = order_of(curve, pts.S);
  rec.torsion = classify(curve, {pts.P, pts.S, pts.R});
  rec.j = j_invariant(curve);
  if (rec.all_positive &&
      (*rec.s_order != Order::finite(4) || *rec.torsion != TorsionClass::Z2xZ8))
    throw Error("all-positive candidate violates the S-order/torsion "
                "invariant at n = " + std::to_string(n));
  return rec;
}

CandidateRecord skip_record(long n, std::optional<Rat> r, std::string reason) {
  CandidateRecord rec;
  rec.n = n;
  rec.r = std::move(r);
  rec.skipped = true;
  rec.skip_reason = std::move(reason);
  return rec;
}

}  // namespace

std::string to_json_line(const CandidateRecord& rec) {
  ordered_json j;
  j["n"] = rec.n;
  j["r"] = rat_or_null(rec.r);
  j["root_branch"] =
      rec.root_branch ? ordered_json(to_string(*rec.root_branch)) : nullptr;
  j["a"] = rec.triple ? ordered_json(rec.triple->a().str()) : nullptr;
  j["b"] = rec.triple ? ordered_json(rec.triple->b().str()) : nullptr;
  j["c"] = rec.triple ? ordered_json(rec.triple->c().str()) : nullptr;
  j["all_positive"] = rec.all_positive;
  j["torsion"] = rec.torsion ? ordered_json(to_string(*rec.torsion)) : nullptr;
  j["s_order"] = rec.s_order ? ordered_json(rec.s_order->str()) : nullptr;
  j["j"] = rat_or_null(rec.j);
  j["skipped"] = rec.skipped;
  j["skip_reason"] = rec.skip_reason;
  return j.dump();
}

CandidateRecord record_from_json_line(const std::string& line) {
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad record line: ") + e.what());
  }
  CandidateRecord rec;
  try {
    rec.n = j.at("n").get<long>();
    if (!j.at("r").is_null()) rec.r = Rat::parse(j["r"].get<std::string>());
    if (!j.at("root_branch").is_null()) {
      std::string b = j["root_branch"].get<std::string>();
      if (b == "plus") rec.root_branch = RootBranch::plus;
      else if (b == "minus") rec.root_branch = RootBranch::minus;
      else throw ParseError("unknown root_branch: " + b);
    }
    if (!j.at("a").is_null())
      rec.triple = Triple::validate(Rat::parse(j["a"].get<std::string>()),
                                    Rat::parse(j["b"].get<std::string>()),
                                    Rat::parse(j["c"].get<std::string>()));
    rec.all_positive = j.at("all_positive").get<bool>();
    if (!j.at("torsion").is_null()) {
      std::string t = j["torsion"].get<std::string>();
      if (t == "Z2xZ2") rec.torsion = TorsionClass::Z2xZ2;
      else if (t == "Z2xZ4") rec.torsion = TorsionClass::Z2xZ4;
      else if (t == "Z2xZ6") rec.torsion = TorsionClass::Z2xZ6;
      else if (t == "Z2xZ8") rec.torsion = TorsionClass::Z2xZ8;
      else throw ParseError("unknown torsion class: " + t);
    }
    if (!j.at("s_order").is_null()) {
      std::string o = j["s_order"].get<std::string>();
      rec.s_order = (o == "inf") ? Order::infinite() : Order::finite(std::stoi(o));
    }
    if (!j.at("j").is_null()) rec.j = Rat::parse(j["j"].get<std::string>());
    rec.skipped = j.at("skipped").get<bool>();
    rec.skip_reason = j.at("skip_reason").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("record field: ") + e.what());
  }
  return rec;
}

std::string csv_header() {
  return "n,r,root_branch,a,b,c,all_positive,torsion,s_order,j,skipped,"
         "skip_reason";
}

std::string to_csv_line(const CandidateRecord& rec) {
  auto opt_rat = [](const std::optional<Rat>& v) {
    return v ? v->str() : std::string();
  };
  std::string quoted = rec.skip_reason;
  size_t pos = 0;
  while ((pos = quoted.find('"', pos)) != std::string::npos) {
    quoted.insert(pos, 1, '"');
    pos += 2;
  }
  std::string line = std::to_string(rec.n) + "," + opt_rat(rec.r) + ",";
  line += rec.root_branch ? to_string(*rec.root_branch) : "";
  line += ",";
  line += rec.triple ? rec.triple->a().str() : "";
  line += ",";
  line += rec.triple ? rec.triple->b().str() : "";
  line += ",";
  line += rec.triple ? rec.triple->c().str() : "";
  line += ",";
  line += rec.all_positive ? "true" : "false";
  line += ",";
  line += rec.torsion ? to_string(*rec.torsion) : "";
  line += ",";
  line += rec.s_order ? rec.s_order->str() : "";
  line += "," + opt_rat(rec.j) + ",";
  line += rec.skipped ? "true" : "false";
  line += ",\"" + quoted + "\"";
  return line;
}

void scan_range(E1Context& ctx, long n_from, long n_max, bool verbose,
                const std::function<void(const CandidateRecord&)>& sink) {
  if (n_from < 1) throw DomainError("scan range must start at n >= 1");
  for (long n = n_from; n <= n_max; ++n) {
    const Point& pt = ctx.multiple(n);
    std::optional<Rat> r = point_to_r(pt);
    if (!r) {
      sink(skip_record(n, std::nullopt, "exceptional point (identity)"));
      continue;
    }
    if (r->is_zero() || *r == Rat(1) || *r == Rat(-1)) {
      sink(skip_record(n, r, "degenerate r = " + r->str() +
                                 " (quadratic in a collapses)"));
      continue;
    }
    std::vector<RootTriple> roots = r_to_triples(*r);
    if (roots.empty()) {
      sink(skip_record(n, r, "no valid triple from the quadratic roots"));
      continue;
    }
    // Both roots realize the same unordered triple (the roots multiply
    // to r²−1 = ab); keep the numerically larger one.
    const RootTriple* pick = &roots.front();
    for (const RootTriple& rt : roots)
      if (rt.a_root > pick->a_root) pick = &rt;
    CandidateRecord rec = classify_into_record(n, *r, *pick);
    if (!rec.all_positive && !verbose) {
      auto sp = sign_pattern(*rec.triple);
      auto sgn = [](int s) { return s > 0 ? "+" : "-"; };
      sink(skip_record(n, r,
                       std::string("mixed signs (") + sgn(sp[0]) + "," +
                           sgn(sp[1]) + "," + sgn(sp[2]) + ")"));
      continue;
    }
    sink(rec);
  }
}

std::vector<CandidateRecord> scan(long n_max, bool verbose) {
  E1Context ctx;
  std::vector<CandidateRecord> out;
  scan_range(ctx, 1, n_max, verbose,
             [&out](const CandidateRecord& rec) { out.push_back(rec); });
  return out;
}

bool verify_family_T(const Curve& c, const Rat& T) {
  return is_isomorphic_over_Q(c, induced_curve(z2z8_family(T)));
}

}  // namespace diocurve
